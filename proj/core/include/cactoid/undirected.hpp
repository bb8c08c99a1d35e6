#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cactoid/matrix.hpp"

namespace cactoid {

/// Unweighted undirected analogue of a block: r cycles sharing a common
/// path of n edges. Branch lengths are sorted ascending on construction;
/// all case analysis below assumes that ordering.
struct UndirectedShape {
    std::size_t path_len = 0;              // n >= 1
    std::vector<std::size_t> branch_lens;  // m_1 <= ... <= m_r, each >= 1

    std::size_t cycle_count() const noexcept { return branch_lens.size(); }
    std::size_t vertex_count() const noexcept;
};

/// Sorts m and validates n >= 1, r >= 1, m_j >= 1.
UndirectedShape make_undirected_shape(std::size_t n, std::vector<std::size_t> m);

/// An exact linear dependence among columns of the distance matrix:
/// sum of coefficient * column(label) = 0.
struct ColumnRelation {
    std::vector<std::pair<std::string, int>> terms;
};

enum class VerdictKind { Closed, Zero, Unknown };

/// What the determinant table says about a shape. `rule` names the case that
/// fired. Zero verdicts carry the column dependence the case rests on;
/// Unknown occurs only for n = 1 with some odd branch >= 3, where no closed
/// form is known.
struct DetVerdict {
    VerdictKind kind = VerdictKind::Unknown;
    std::optional<Rational> value;            // set for Closed
    std::string rule;
    std::optional<ColumnRelation> dependence;  // set for Zero where a witness exists
};

/// Hop-count distance matrix by breadth-first search. Symmetric, zero
/// diagonal, labeled "u0".."un" and "v{i}.{j}" (j = position after sorting).
Matrix undirected_distance_matrix(const UndirectedShape& shape);

/// Classifies det D by the closed-form table. For n = 1 with every branch
/// length 1 the returned Closed value is the tabulated constant
/// (-1)^(r-1) 2^(r-2); see classify_with_oracle, which cross-checks it.
DetVerdict classify_det(const UndirectedShape& shape);

/// Ground truth: exact determinant of the BFS distance matrix.
/// Throws SizeBoundError above max_vertices.
Rational det_oracle(const UndirectedShape& shape, std::size_t max_vertices = 64);

/// Checks that the relation holds exactly on the given matrix columns.
bool verify_dependence(const Matrix& distance, const ColumnRelation& relation);

/// Inverse of the distance matrix of an odd cycle on 2k+1 vertices:
/// -2I - C^k - C^(k+1) + (2k+1)/(k(k+1)) J with C the cyclic shift.
Matrix odd_cycle_inverse(std::size_t k);

/// Classifier verdict disagreeing with the oracle. Both values are kept;
/// neither is silently preferred.
struct Discrepancy {
    UndirectedShape shape;
    std::string rule;
    Rational claimed;   // classifier value (0 for a Zero verdict)
    Rational computed;  // oracle determinant
};

struct ClassifyOutcome {
    DetVerdict verdict;
    std::optional<Rational> oracle;     // absent when the shape exceeds the bound
    std::optional<bool> agrees;         // absent for Unknown or missing oracle
    std::optional<Discrepancy> discrepancy;
};

/// Runs the classifier and the oracle side by side and records any mismatch.
ClassifyOutcome classify_with_oracle(const UndirectedShape& shape, std::size_t max_vertices = 64);

/// Every shape with vertex_count() <= max_vertices, in deterministic order.
std::vector<UndirectedShape> all_shapes_up_to(std::size_t max_vertices);

}  // namespace cactoid
