#pragma once

// Order-specific term representation used inside the Gröbner engine, and
// the reduction kernels. Each kernel has a serial reference form and an
// OpenMP form; both must produce identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "flatcheck/monomial.hpp"
#include "flatcheck/order.hpp"
#include "flatcheck/rational.hpp"

namespace flatcheck::engine {

struct Term {
  Monomial mon;
  std::uint32_t comp = 0;
  Rational coef;
};

/// Terms sorted ascending under the active order; back() is the leading term.
using TermVec = std::vector<Term>;

/// Basis element: monic, with a cached divisibility mask of its leading monomial.
struct Element {
  TermVec terms;
  std::uint64_t mask = 0;

  explicit Element(TermVec t);
  const Term& lead() const { return terms.back(); }
};

enum class Exec { Serial, Parallel };

/// a - c * m * b, all ascending; b's terms are shifted by m in place of their
/// own monomials, components unchanged.
TermVec sub_mul(const TermVec& a, const Rational& c, const Monomial& m, std::span<const Term> b,
                const MonomialOrder& order);

/// Sort terms ascending and merge duplicates (drops zeros).
void normalize(TermVec& terms, const MonomialOrder& order);

/// Divide by the leading coefficient.
void make_monic(TermVec& terms);

/// Index of the first basis element whose leading term divides `t`, or -1.
long find_reducer(const Term& t, std::span<const Element> basis);

/// Full normal form of f modulo basis (leading and tail terms). Ties between
/// reducers go to the smallest basis index.
TermVec reduce(TermVec f, std::span<const Element> basis, const MonomialOrder& order);

/// Reduce every input independently. Parallel form splits the batch across
/// OpenMP threads; output is identical to the serial form.
void reduce_batch(std::span<TermVec> inputs, std::span<const Element> basis, const MonomialOrder& order,
                  Exec exec);

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t max_basis_size = 0;
};

/// Reduced Gröbner basis (monic, ascending by leading term) of the module
/// generated by `generators`. `rank` enables the product criterion for ideals.
///
/// Serial: one S-pair at a time, smallest sugar first. Parallel: all pairs
/// of the minimal sugar reduced as an OpenMP batch, then inserted in pair
/// order. Both yield the same reduced basis.
std::vector<TermVec> buchberger(std::vector<TermVec> generators, std::size_t rank, const MonomialOrder& order,
                                Exec exec = Exec::Parallel, BuchbergerStats* stats = nullptr);

/// S-vector of two basis elements with equal leading components.
TermVec s_vector(const Element& a, const Element& b, const MonomialOrder& order);

}  // namespace flatcheck::engine
