#pragma once

// Coefficient tables for the long invariant polynomials. Each row is an
// integer coefficient followed by exponents of the listed variables.

#include <array>
#include <cstddef>

namespace sextic::detail {

template <std::size_t N>
struct Term {
  long long coef;
  std::array<int, N> exp;
};

using Term3 = Term<3>;
using Term4 = Term<4>;

// IgRosI2: coefficient, exponents of (s, p, q)
constexpr Term3 kIgRosI2[] = {
    {6, {2, 0, 0}},
    {-4, {1, 1, 0}},
    {-16, {1, 0, 1}},
    {6, {0, 2, 0}},
    {-16, {0, 1, 0}},
    {24, {0, 0, 1}},
};
// IgRosI4: coefficient, exponents of (s, p, q)
constexpr Term3 kIgRosI4[] = {
    {-12, {3, 0, 1}},
    {4, {2, 2, 0}},
    {-4, {2, 1, 1}},
    {4, {2, 0, 2}},
    {12, {2, 0, 1}},
    {-4, {1, 2, 0}},
    {44, {1, 1, 1}},
    {-12, {1, 0, 1}},
    {-12, {0, 3, 0}},
    {12, {0, 2, 1}},
    {4, {0, 2, 0}},
    {-12, {0, 1, 2}},
    {-72, {0, 0, 2}},
};
// IgRosI6: coefficient, exponents of (s, p, q)
constexpr Term3 kIgRosI6[] = {
    {-24, {5, 0, 1}},
    {8, {4, 2, 0}},
    {20, {4, 1, 1}},
    {48, {4, 0, 2}},
    {24, {4, 0, 1}},
    {-8, {3, 3, 0}},
    {-36, {3, 2, 1}},
    {-8, {3, 2, 0}},
    {20, {3, 1, 2}},
    {118, {3, 1, 1}},
    {-24, {3, 0, 3}},
    {-136, {3, 0, 2}},
    {-24, {3, 0, 1}},
    {8, {2, 4, 0}},
    {-8, {2, 3, 1}},
    {-36, {2, 3, 0}},
    {8, {2, 2, 2}},
    {8, {2, 2, 0}},
    {-194, {2, 1, 2}},
    {-66, {2, 1, 1}},
    {32, {2, 0, 3}},
    {10, {2, 0, 2}},
    {20, {1, 4, 0}},
    {118, {1, 3, 1}},
    {20, {1, 3, 0}},
    {-66, {1, 2, 2}},
    {-194, {1, 2, 1}},
    {76, {1, 1, 3}},
    {412, {1, 1, 2}},
    {76, {1, 1, 1}},
    {150, {1, 0, 3}},
    {-42, {1, 0, 2}},
    {-24, {0, 5, 0}},
    {24, {0, 4, 1}},
    {48, {0, 4, 0}},
    {-24, {0, 3, 2}},
    {-136, {0, 3, 1}},
    {-24, {0, 3, 0}},
    {10, {0, 2, 2}},
    {32, {0, 2, 1}},
    {-42, {0, 1, 3}},
    {150, {0, 1, 2}},
    {-36, {0, 0, 4}},
    {-252, {0, 0, 3}},
    {-36, {0, 0, 2}},
};
// Q: coefficient, exponents of (psi4, psi6, chi10, chi12)
constexpr Term4 kQ[] = {
    {-9, {7, 0, 2, 1}},
    {-2, {6, 1, 3, 0}},
    {27, {6, 0, 0, 3}},
    {-331776, {5, 0, 4, 0}},
    {18, {4, 2, 2, 1}},
    {55240704, {4, 0, 2, 2}},
    {4, {3, 3, 3, 0}},
    {-54, {3, 2, 0, 3}},
    {47278080, {3, 1, 3, 1}},
    {-161243136, {3, 0, 0, 4}},
    {8294400, {2, 2, 4, 0}},
    {-107495424, {2, 1, 1, 3}},
    {9459597312000, {2, 0, 4, 1}},
    {-9, {1, 4, 2, 1}},
    {52254720, {1, 2, 2, 2}},
    {2866544640000, {1, 1, 5, 0}},
    {-111451255603200, {1, 0, 2, 3}},
    {-2, {0, 5, 3, 0}},
    {27, {0, 4, 0, 3}},
    {12441600, {0, 3, 3, 1}},
    {-161243136, {0, 2, 0, 4}},
    {-20639121408000, {0, 1, 3, 2}},
    {264180754022400000, {0, 0, 6, 0}},
    {240734712102912, {0, 0, 0, 5}},
};
// PhiQ: coefficient, exponents of (j1, j2, j3)
constexpr Term3 kPhiQ[] = {
    {236196, {10, 0, 0}},
    {-972, {9, 2, 0}},
    {5832, {9, 1, 1}},
    {19245600, {9, 1, 0}},
    {-8748, {9, 0, 2}},
    {-104976000, {9, 0, 1}},
    {125971200000, {9, 0, 0}},
    {1, {8, 4, 0}},
    {-12, {8, 3, 1}},
    {-77436, {8, 3, 0}},
    {54, {8, 2, 2}},
    {870912, {8, 2, 1}},
    {-507384000, {8, 2, 0}},
    {-108, {8, 1, 3}},
    {-3090960, {8, 1, 2}},
    {2099520000, {8, 1, 1}},
    {81, {8, 0, 4}},
    {3499200, {8, 0, 3}},
    {78, {7, 5, 0}},
    {-1332, {7, 4, 1}},
    {592272, {7, 4, 0}},
    {8910, {7, 3, 2}},
    {-4743360, {7, 3, 1}},
    {-29376, {7, 2, 3}},
    {9331200, {7, 2, 2}},
    {47952, {7, 1, 4}},
    {-31104, {7, 0, 5}},
    {-159, {6, 6, 0}},
    {1728, {6, 5, 1}},
    {-41472, {6, 5, 0}},
    {-6048, {6, 4, 2}},
    {6912, {6, 3, 3}},
    {80, {5, 7, 0}},
    {-384, {5, 6, 1}},
};
// PhiK: coefficient, exponents of (j1, j2, j3)
constexpr Term3 kPhiK[] = {
    {131220, {4, 0, 0}},
    {-756, {3, 2, 0}},
    {4536, {3, 1, 1}},
    {-2332800, {3, 1, 0}},
    {-6804, {3, 0, 2}},
    {1, {2, 4, 0}},
    {-12, {2, 3, 1}},
    {5130, {2, 3, 0}},
    {54, {2, 2, 2}},
    {-17496, {2, 2, 1}},
    {-108, {2, 1, 3}},
    {81, {2, 0, 4}},
    {-2, {1, 5, 0}},
    {12, {1, 4, 1}},
    {-18, {1, 3, 2}},
    {1, {0, 6, 0}},
};
// PhiG3: coefficient, exponents of (j1, j2, j3)
constexpr Term3 kPhiG3[] = {
    {87392520, {6, 0, 0}},
    {-599724, {5, 2, 0}},
    {3598344, {5, 1, 1}},
    {-881798400, {5, 1, 0}},
    {-5397516, {5, 0, 2}},
    {-1259712000, {5, 0, 1}},
    {1350, {4, 4, 0}},
    {-16200, {4, 3, 1}},
    {4175226, {4, 3, 0}},
    {72900, {4, 2, 2}},
    {-15390648, {4, 2, 1}},
    {-145800, {4, 1, 3}},
    {4898880, {4, 1, 2}},
    {109350, {4, 0, 4}},
    {-1, {3, 6, 0}},
    {18, {3, 5, 1}},
    {-6345, {3, 5, 0}},
    {-135, {3, 4, 2}},
    {52650, {3, 4, 1}},
    {-1961496, {3, 4, 0}},
    {540, {3, 3, 3}},
    {-144585, {3, 3, 2}},
    {-1215, {3, 2, 4}},
    {131220, {3, 2, 3}},
    {1458, {3, 1, 5}},
    {-729, {3, 0, 6}},
    {3, {2, 7, 0}},
    {-36, {2, 6, 1}},
    {4995, {2, 6, 0}},
    {162, {2, 5, 2}},
    {-14580, {2, 5, 1}},
    {-324, {2, 4, 3}},
    {243, {2, 3, 4}},
    {-3, {1, 8, 0}},
    {18, {1, 7, 1}},
    {-27, {1, 6, 2}},
    {1, {0, 9, 0}},
};

/// sum coef * prod vars[i]^exp[i]; T must be constructible from long.
template <class T, std::size_t N, std::size_t M>
T evaluate_terms(const Term<N> (&table)[M], const std::array<T, N>& vars) {
  int top = 0;
  for (const auto& t : table)
    for (int e : t.exp) top = e > top ? e : top;
  std::array<std::array<T, 16>, N> pw;
  for (std::size_t v = 0; v < N; ++v) {
    pw[v][0] = T(1);
    for (int e = 1; e <= top; ++e) pw[v][static_cast<std::size_t>(e)] = T(pw[v][static_cast<std::size_t>(e - 1)] * vars[v]);
  }
  T acc = T(0);
  for (const auto& t : table) {
    T m = T(static_cast<long>(t.coef));
    for (std::size_t v = 0; v < N; ++v)
      if (t.exp[v] != 0) m = T(m * pw[v][static_cast<std::size_t>(t.exp[v])]);
    acc = T(acc + m);
  }
  return acc;
}

}  // namespace sextic::detail
