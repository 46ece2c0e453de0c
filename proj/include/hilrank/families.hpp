#pragma once

#include "hilrank/simplicial_complex.hpp"

namespace hilrank {

/// The m-cycle [12][23]...[(m-1)m][m1]. Requires m >= 3.
SimplicialComplex cyclic_complex(int m);

/// Singleton facets [1][2]...[m] (independence model). Requires m >= 1.
SimplicialComplex main_effect_complex(int m);

/// The full simplex 2^[m], a single facet. Requires m >= 1.
SimplicialComplex saturated_complex(int m);

/// Boundary of the full simplex: all (m-1)-subsets of [m]. Requires m >= 2.
SimplicialComplex simplex_boundary_complex(int m);

}  // namespace hilrank
