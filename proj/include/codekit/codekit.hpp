#pragma once

#include "codekit/error.hpp"
#include "codekit/words.hpp"
#include "codekit/automata.hpp"
#include "codekit/regex.hpp"
#include "codekit/theta.hpp"
#include "codekit/code_analysis.hpp"
#include "codekit/measure.hpp"
#include "codekit/hull.hpp"
#include "codekit/completion.hpp"
#include "codekit/families.hpp"
#include "codekit/io.hpp"
