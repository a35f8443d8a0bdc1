#pragma once

#include <vector>

#include "ptab/polynomial.hpp"
#include "ptab/series.hpp"
#include "ptab/tableau.hpp"

namespace ptab {

// ------------------------------------------------------------ shape sums

/// Fillings of the Young diagram of `shape` satisfying both tableau
/// conditions, weighted p^{#0} q^{#1}. Memoized; safe to call concurrently.
Polynomial F_lambda(const Partition& shape);
/// As above, checking that `rows` equals the number of parts.
Polynomial F_lambda(const Partition& shape, int rows);

enum class ShapeRange {
  full_first_row,  // lambda_1 = n - k, the shapes permutation tableaux live on
  whole_box,       // every partition inside the k x (n-k) box
};

/// Sum of F_lambda * r^{#2} over shapes in the k x (n-k) box.
Polynomial D_kn(int k, int n, ShapeRange range = ShapeRange::full_first_row);

// ------------------------------------------------------ q-Eulerian forms

/// E_{k,n}(q) from the alternating closed formula.
Polynomial E_kn_closed(int k, int n);
/// q^{k-n} E_{k,n}(q).
Polynomial E_hat(int k, int n);

/// The Carlitz recurrence as written, with B_{0,0} = 1 and B_{0,k} = 0.
Polynomial carlitz_recurrence(int n, int k);
/// Sum of q^{maj - C(k,2)} over permutations of length n with k-1 descents.
Polynomial carlitz_definitional(int n, int k);

/// How the recurrence indices relate to the definitional ones:
/// B_{n,k} = q^{-normalization(k)} * carlitz_recurrence(n, k - index_shift),
/// with normalization(k) = C(k,2) when `subtract_binomial` is set.
struct CarlitzConvention {
  int index_shift = 0;
  bool subtract_binomial = false;
};

/// The convention under which the recurrence reproduces the definitional
/// polynomials for n = 3 and 4. Throws std::logic_error if none does.
CarlitzConvention resolve_carlitz_convention();

/// Carlitz' q-Eulerian polynomial computed by the recurrence under the
/// resolved convention.
Polynomial carlitz_B(int n, int k);

// ------------------------------------------------------ generating series

/// The rational closed forms of sum_n D_{k,n} x^n for k = 1, 2, 3.
TruncatedSeries D_k_series(int k, int order);

/// sum_i y^i (q^{2i+1} - y) / (q^{i^2+i+1} (q^i - q^{i+1}[i]x + [i]xy)) over
/// i <= order, keeping powers y^k with k <= order. Its y^k x^n coefficient
/// is E_{k,n}(q).
TruncatedSeries E_gf_series(int order);

/// sum_{k,n} Ehat_{k,n}(q) y^k x^n, obtained from E_gf_series by the
/// substitution x -> x/q, y -> q y.
TruncatedSeries E_hat_gf_series(int order);

/// The same generating function from the J-fraction with
/// b_h = y[h+1]_q + [h]_q and lambda_h = y[h]_q^2, summed over Motzkin paths.
TruncatedSeries E_hat_cf_series(int order);

// ---------------------------------------------------------- lattice paths

struct WeightedLatticeStep {
  enum class Kind { northeast, east, southeast };
  Kind kind = Kind::northeast;
  int drop = 0;       // j for a southeast step (1, -j)
  Polynomial weight;  // multiplicity * p^a q^b r^c x, without the x
};

/// Steps available from height `height` after `rows_seen` vertical steps in
/// a box of height k. Column steps carry the summed weight of all columns
/// introducing the same number of new bad zeros.
std::vector<WeightedLatticeStep> lattice_steps(int k, int rows_seen, int height);

/// sum_n D_{k,n} x^n through x^order, by summing weighted lattice paths.
TruncatedSeries lattice_path_D(int k, int order);

}  // namespace ptab
