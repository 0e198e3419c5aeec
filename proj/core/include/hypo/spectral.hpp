#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypo/graph.hpp"

namespace hypo {

using BigInt = boost::multiprecision::cpp_int;

/// Adjacency spectrum of a graph.
struct Spectrum {
  std::vector<double> eigenvalues;  // sorted descending
  double energy = 0.0;              // sum of |eigenvalue|
  int n = 0;
  int m = 0;
};

// Exact covers graphs whose spectrum is wholly integral (e.g. a single
// edge or the 4-cycle, where E equals n exactly and no floating tier can
// resolve the sign of E - n): the energy is then an exact integer computed
// from the characteristic polynomial.
enum class PrecisionTier { Standard, Escalated, Exact };

struct EnergyVerdict {
  bool hypoenergetic = false;  // E < n
  double margin = 0.0;         // E - n
  double energy = 0.0;
  PrecisionTier tier = PrecisionTier::Standard;
};

/// Thrown when the energy-vs-order margin stays below the decision floor
/// even at escalated precision. Carries both estimates; never swallowed
/// into a silent guess.
class UnresolvedVerdict : public std::runtime_error {
 public:
  UnresolvedVerdict(double standard_energy, double escalated_energy, int n);
  double standard_energy;
  double escalated_energy;
  int n;
};

/// Eigenvalues of a dense symmetric matrix (row-major, n x n) by cyclic
/// Jacobi rotations, iterated until the off-diagonal Frobenius norm drops
/// below 1e-12 * n. Sorted descending. Throws on asymmetric input or
/// non-convergence within the sweep budget.
std::vector<double> eigenvalues_symmetric(const std::vector<double>& matrix,
                                          int n);

Spectrum spectrum(const Graph& g);

/// E(G): sum of absolute eigenvalues of the adjacency matrix. Zero for the
/// empty graph; additive over components.
double energy(const Graph& g);

/// Characteristic polynomial det(xI - A) with exact integer coefficients.
/// coeffs[k] multiplies x^k; coeffs[n] = 1, coeffs[n-1] = 0,
/// coeffs[n-2] = -m.
struct IntPoly {
  std::vector<BigInt> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  /// p(x) evaluated in double arithmetic (Horner).
  double eval(double x) const;
  /// Human-readable form like "x^5 - 6x^3".
  std::string pretty() const;
};

/// Faddeev-LeVerrier over exact big integers (the division at step k is
/// exact).
IntPoly char_poly_int(const Graph& g);

/// Decides E < n with a tiered precision ladder: classify outright when
/// |E - n| >= 1e-6 at standard precision. Otherwise first try an exact
/// decision: if the characteristic polynomial splits into integer roots,
/// E is an exact integer and the verdict (tier Exact) follows without any
/// floating-point tolerance -- this settles the genuine ties where E = n
/// on the nose. Failing that, recompute with a tighter Jacobi threshold
/// and extended-precision accumulation and require |E - n| >= 1e-9.
/// Throws UnresolvedVerdict below that floor.
EnergyVerdict classify(const Graph& g);

inline constexpr double kTauEscalate = 1e-6;
inline constexpr double kTauDecide = 1e-9;

}  // namespace hypo
