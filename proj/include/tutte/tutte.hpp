#pragma once

#include "tutte/corpus.hpp"
#include "tutte/error.hpp"
#include "tutte/graph.hpp"
#include "tutte/io.hpp"
#include "tutte/matrix.hpp"
#include "tutte/partition.hpp"
#include "tutte/polynomial.hpp"
#include "tutte/polynomials.hpp"
#include "tutte/rational.hpp"
#include "tutte/reference.hpp"
#include "tutte/split.hpp"
