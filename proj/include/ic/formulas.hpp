#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ic {

using ExactCount = boost::multiprecision::cpp_int;

/// Maximum number of induced x-y paths over n-vertex graphs. Requires n >= 4.
ExactCount f2(int n);
/// Same, restricted to paths with an odd number of vertices. Requires n >= 10.
ExactCount f2_odd(int n);
/// Product of the central cluster sizes of the even-path family. Requires n >= 10.
ExactCount f2_even(int n);

/// Induced-cycle count of the empty cyclic braid H_n. Requires n >= 12.
ExactCount m_lower(int n);

/// C(d,2) * 3^((n-d-1)/3), evaluated in floating point. Requires 0 <= d < n.
double vertex_cycle_bound(int n, int d);

/// Sum of C(n,i) for 1 <= i <= floor(0.11 n). Requires n >= 1.
ExactCount short_cycle_mass(int n);

}  // namespace ic
