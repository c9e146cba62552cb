#pragma once

// Umbrella header for the clique-partitioning graph compression toolkit.

#include "cpgc/bipartite_graph.hpp"
#include "cpgc/compress_cpgc.hpp"
#include "cpgc/compress_fm.hpp"
#include "cpgc/compressed_graph.hpp"
#include "cpgc/dinitz.hpp"
#include "cpgc/generator.hpp"
#include "cpgc/io.hpp"
#include "cpgc/run_report.hpp"
#include "cpgc/transform.hpp"
#include "cpgc/verify.hpp"
