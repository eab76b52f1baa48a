#pragma once

#include <vector>

#include "schub/character.hpp"
#include "schub/diagram.hpp"
#include "schub/flag_bound.hpp"
#include "schub/zpolynomial.hpp"

namespace schub {

// Desk-scale guardrails for oracle instances.
struct Caps {
    long long max_fillings = 20000;  // fillings enumerated per diagram
    long long max_terms = 1000000;   // expanded terms per product of minors
};

// A column-strict flagged filling: entries per column, aligned with the
// canonical column order of the diagram it fills.
struct Filling {
    std::vector<Column> entries;

    bool operator==(const Filling& other) const { return entries == other.entries; }
};

// All strictly increasing b with b_i <= bound(a_i), in lexicographic order.
std::vector<Column> column_fillings(const Column& a, const FlagBound& fb);

// All flagged fillings of d, columnwise Cartesian product, lexicographic.
std::vector<Filling> enumerate_fillings(const Diagram& d, const FlagBound& fb,
                                        const Caps& caps = {});

// Exact expansion of the product of minors picked out by the filling.
ZPolynomial expand_delta(const Diagram& d, const Filling& tau, const FlagBound& fb,
                         const Caps& caps = {});

// Character of the flagged Schur module: fillings grouped by weight, exact
// rank of the span of expanded products of minors per weight class.
CharacterResult character_oracle(const Diagram& d, const FlagBound& fb,
                                 const Caps& caps = {});

// Character of ker(R_{k+1} E^D -> R_k E^D) over the ambient flag `base`:
// the difference of the two twisted oracle characters.
Polynomial kernel_character(const Diagram& d, int k, const FlagBound& base,
                            const Caps& caps = {});

// One signed product of minors in an exchange-relation candidate.
struct ExchangeTerm {
    int sign = 1;
    std::vector<Column> rows;    // row sets, one per factor
    std::vector<Column> entries; // column sets, one per factor
};

// True iff the signed sum of expanded products is exactly zero. All terms
// must share the same diagram shape (equal multisets of row sets).
bool check_exchange_identity(const std::vector<ExchangeTerm>& terms, const FlagBound& fb);

enum class PartialKernelCase { iso, wedge2, linear };

struct PartialKernelPrediction {
    PartialKernelCase kind = PartialKernelCase::iso;
    Int dimension = 0;
};

// Single-column kernel classification over a partial flag:
//   (i)   k not in a:            the projection is an isomorphism;
//   (ii)  {k,k+1} subset of a:   wedge-square kernel;
//   (iii) a cap {k,k+1} = {k}:   linear kernel.
// The predicted dimension counts the kernel generators directly: fillings
// b <=_{k+1} a whose entry in row k lies in the block (d_{k-1}, d_k]. For
// columns with no rows above k+1 this equals C(c_k,2) * dim R_{k+1}E^{a'}
// in case (ii) and c_k * dim R_{k+1}E^{a'} in case (iii); for higher rows
// the strict column increase couples the factors and the product forms
// over-count, so the direct count is used.
PartialKernelPrediction partial_flag_kernel_case(const Column& a, int k,
                                                 const RankSequence& d);

} // namespace schub
