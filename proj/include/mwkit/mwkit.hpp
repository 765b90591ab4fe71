#pragma once

#include "types.hpp"
#include "random.hpp"
#include "graph.hpp"
#include "generators.hpp"
#include "graph_io.hpp"
#include "gf2.hpp"
#include "partition.hpp"
#include "merge_sequence.hpp"
#include "mseq_io.hpp"
#include "solver.hpp"
#include "extraction.hpp"
#include "coloring.hpp"
#include "flips.hpp"
#include "certificates.hpp"
