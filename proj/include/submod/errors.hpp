// Error taxonomy. Construction-time table defects name the offending
// cell or triple; lattice and formation operations throw on contract
// violations rather than returning sentinel values.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace submod {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- multiplication table validation ---
struct TableError : Error {
  using Error::Error;
};
struct NotClosed : TableError {
  int row, col;
  NotClosed(int r, int c, const std::string& what) : TableError(what), row(r), col(c) {}
};
struct NoIdentity : TableError {
  using TableError::TableError;
};
struct NoInverse : TableError {
  int elem;
  NoInverse(int e, const std::string& what) : TableError(what), elem(e) {}
};
struct NotAssociative : TableError {
  int a, b, c;
  NotAssociative(int a_, int b_, int c_, const std::string& what)
      : TableError(what), a(a_), b(b_), c(c_) {}
};

// --- subgroup / lattice contracts ---
struct NotNormal : Error {
  using Error::Error;
};
struct NotContained : Error {
  using Error::Error;
};
struct NotComparable : Error {
  using Error::Error;
};
struct NotSolvable : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  std::size_t limit;
  BudgetExceeded(std::size_t lim, const std::string& what) : Error(what), limit(lim) {}
};
// internal alarm: the join of normal nilpotent subgroups came out non-nilpotent
struct FittingNotNilpotent : Error {
  using Error::Error;
};

// --- structure theorems / formations ---
struct LemmaViolated : Error {
  using Error::Error;
};
struct ResidualClosureFailure : Error {
  using Error::Error;
};

// --- catalog / parsing ---
struct BadParameters : Error {
  using Error::Error;
};
struct UnsupportedSize : Error {
  using Error::Error;
};
struct ParseError : Error {
  int line;
  ParseError(int ln, const std::string& what) : Error(what), line(ln) {}
};
struct ClosureBudgetExceeded : Error {
  using Error::Error;
};
struct CatalogError : Error {
  std::string entry;
  CatalogError(std::string ent, const std::string& what) : Error(what), entry(std::move(ent)) {}
};

// --- CLI ---
struct UnknownGroup : Error {
  using Error::Error;
};
struct UnknownPredicate : Error {
  using Error::Error;
};
struct BadSubgroupSpec : Error {
  using Error::Error;
};

}  // namespace submod
