#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cactoid {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shape of an argument does not admit the operation (non-square, length mismatch, ...).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A matrix turned out singular where an inverse was required. Carries the
/// rank reached by the elimination, which is what you want to see when a
/// zero determinant was expected for structural reasons.
class SingularError : public Error {
public:
    SingularError(std::size_t rank, const std::string& msg) : Error(msg), rank_(rank) {}
    std::size_t rank() const noexcept { return rank_; }

private:
    std::size_t rank_;
};

/// Leading (or trailing) block of a Schur split is singular.
class PivotError : public Error {
public:
    using Error::Error;
};

/// Malformed block/graph description: inconsistent lengths, unknown vertex
/// names, misaligned embeddings.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Two blocks share two or more vertices.
class NotACactoidError : public StructuralError {
public:
    using StructuralError::StructuralError;
};

/// The glued graph is not connected.
class ConnectivityError : public StructuralError {
public:
    using StructuralError::StructuralError;
};

/// The block intersection structure contains a cycle.
class BlockTreeError : public StructuralError {
public:
    using StructuralError::StructuralError;
};

/// Some cycle has total weight zero; the requested closed form is undefined.
/// The index refers to the canonical (sorted) cycle order.
class ZeroCycleWeightError : public Error {
public:
    ZeroCycleWeightError(std::size_t cycle, const std::string& msg) : Error(msg), cycle_(cycle) {}
    std::size_t cycle() const noexcept { return cycle_; }

private:
    std::size_t cycle_;
};

/// Input is outside the domain where the shortest-path oracle is meaningful
/// (a non-positive edge weight is present).
class OracleDomainError : public Error {
public:
    using Error::Error;
};

/// A brute-force oracle was asked for a problem above its configured size cap.
class SizeBoundError : public Error {
public:
    using Error::Error;
};

/// Bad JSON or bad rational literal in an input file.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace cactoid
