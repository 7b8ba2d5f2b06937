#pragma once

#include <vector>

#include "qball/ncpoly.hpp"
#include "qball/report.hpp"

namespace qball {

/// Strictly increasing list of indices.
using IndexSet = std::vector<int>;

/// Throws ErrorKind::index_range unless `s` is strictly increasing within 1..bound.
void check_index_set(const IndexSet& s, int bound);
/// Complement of `s` in 1..n.
IndexSet complement(const IndexSet& s, int n);
/// card{(a, b) in A x B : a > b}
int inversions(const IndexSet& a, const IndexSet& b);
/// All k-subsets of 1..n in lexicographic order.
std::vector<IndexSet> subsets(int n, int k);

/// Right-hand sides of the quantum matrix relations for generators of one
/// class, with hi = (i', j') after lo = (i, j).
std::vector<RuleTerm> matrix_rule(const GeneratorId& hi, const GeneratorId& lo);

/// C[Mat_{rows,cols}]_q on generators cls[i,j].
AlgebraPtr mat_algebra(int rows, int cols, GenClass cls = GenClass::t);

enum class MinorForm { rows, columns };

/// Quantum minor with rows I and columns J. The row form permutes row indices,
/// the column form permutes column indices; both give the same element.
NCPoly qminor(const Algebra& alg, const IndexSet& rows, const IndexSet& cols,
              GenClass cls = GenClass::t, MinorForm form = MinorForm::rows);
NCPoly qdet(const Algebra& alg, int size, GenClass cls = GenClass::t);

/// Both orders of the Laplace expansion along the upper n rows inside
/// C[Mat_{2n}]_q. With `flip_sign` the second sum uses (-q)^{+l}, which must fail.
Report laplace_check(int n, bool flip_sign = false);
/// [det_q, t_ij] = 0 for every generator of C[Mat_size]_q.
Report centrality_check(int size);

/// Product top * bottom in C[Mat_{2n}]_q with the rows of `bottom` shifted by n.
/// Both inputs live in C[Mat_{n,2n}]_q.
NCPoly m_map(const Algebra& rect, const NCPoly& top, const NCPoly& bottom, const Algebra& square);

}  // namespace qball
