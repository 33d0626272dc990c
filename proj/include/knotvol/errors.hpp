#pragma once

#include <stdexcept>
#include <string>

namespace knotvol {

// Malformed triangulation documents or structurally invalid term lists.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// An evaluation point where some tetrahedron shape degenerates to 0, 1 or
// infinity (or a side variable does), so the requested quantity is undefined.
class NonEssentialPointError : public std::domain_error {
public:
    explicit NonEssentialPointError(const std::string& what) : std::domain_error(what) {}
};

// Root finding or solution selection failed (non-convergence, empty set,
// ambiguous maximum, broken conjugate pairing).
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace knotvol
