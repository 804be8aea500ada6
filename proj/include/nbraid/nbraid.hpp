#pragma once

#include "alexander.hpp"
#include "braid_word.hpp"
#include "errors.hpp"
#include "garside.hpp"
#include "index.hpp"
#include "laurent.hpp"
#include "lorenz.hpp"
#include "markov.hpp"
#include "nbridge.hpp"
#include "permutation.hpp"
#include "rewrite.hpp"
#include "serialize.hpp"
#include "sweep.hpp"
