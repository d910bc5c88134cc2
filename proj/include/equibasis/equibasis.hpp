#pragma once

#include "equibasis/csv.hpp"
#include "equibasis/curve.hpp"
#include "equibasis/entanglement.hpp"
#include "equibasis/errors.hpp"
#include "equibasis/figures.hpp"
#include "equibasis/gauss_basis.hpp"
#include "equibasis/gauss_sums.hpp"
#include "equibasis/graph_basis.hpp"
#include "equibasis/linalg.hpp"
#include "equibasis/matrix.hpp"
#include "equibasis/multipartite.hpp"
#include "equibasis/parallel.hpp"
#include "equibasis/precision.hpp"
#include "equibasis/verify.hpp"
