#pragma once

// Integer lattices with a symmetric pairing, classes in them, and embedded
// surfaces representing lattice vectors.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "reveng/error.hpp"
#include "reveng/int_matrix.hpp"

namespace reveng {

using ClassVector = std::vector<std::int64_t>;

class SymmetricForm {
 public:
  SymmetricForm() = default;
  explicit SymmetricForm(std::vector<std::vector<std::int64_t>> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i].size() != rows_.size()) throw InvalidArgument("pairing matrix is not square");
      for (std::size_t j = 0; j < i; ++j)
        if (rows_[i][j] != rows_[j][i]) throw InvalidArgument("pairing matrix is not symmetric");
    }
  }

  static SymmetricForm diagonal(std::vector<std::int64_t> const& d) {
    std::vector<std::vector<std::int64_t>> rows(d.size(), std::vector<std::int64_t>(d.size(), 0));
    for (std::size_t i = 0; i < d.size(); ++i) rows[i][i] = d[i];
    return SymmetricForm(std::move(rows));
  }

  std::size_t dimension() const noexcept { return rows_.size(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }
  std::vector<std::vector<std::int64_t>> const& rows() const noexcept { return rows_; }

  void require(ClassVector const& v, char const* what) const {
    if (v.size() != dimension())
      throw InvalidArgument(std::string(what) + " has " + std::to_string(v.size()) +
                            " coordinates, lattice has rank " + std::to_string(dimension()));
  }

  std::int64_t pair(ClassVector const& u, ClassVector const& v) const {
    require(u, "class");
    require(v, "class");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) s += u[i] * rows_[i][j] * v[j];
    }
    return s;
  }
  std::int64_t square(ClassVector const& v) const { return pair(v, v); }

  // Even iff every basis vector has even square.
  bool is_even() const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (rows_[i][i] % 2 != 0) return false;
    return true;
  }

  BigInt determinant() const {
    IntMatrix m(rows_.size(), rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < rows_.size(); ++j) m(i, j) = rows_[i][j];
    return reveng::determinant(std::move(m));
  }

  friend bool operator==(SymmetricForm const&, SymmetricForm const&) = default;

 private:
  std::vector<std::vector<std::int64_t>> rows_;
};

struct H2Lattice {
  std::vector<std::string> basis_names;
  SymmetricForm pairing;

  H2Lattice() = default;
  H2Lattice(std::vector<std::string> names, SymmetricForm q) : basis_names(std::move(names)), pairing(std::move(q)) {
    if (basis_names.size() != pairing.dimension())
      throw InvalidArgument("lattice: " + std::to_string(basis_names.size()) + " basis names for a rank " +
                            std::to_string(pairing.dimension()) + " pairing");
  }

  std::size_t rank() const noexcept { return basis_names.size(); }
  bool empty() const noexcept { return basis_names.empty(); }

  friend bool operator==(H2Lattice const&, H2Lattice const&) = default;
};

struct SurfaceClass {
  std::string name;
  std::int64_t genus = 0;
  std::int64_t square = 0;
  ClassVector vector;

  friend bool operator==(SurfaceClass const&, SurfaceClass const&) = default;
};

// Declared squares must agree with the pairing.
inline void validate_surfaces(H2Lattice const& lattice, std::vector<SurfaceClass> const& surfaces) {
  for (auto const& s : surfaces) {
    if (s.genus < 0) throw InvalidArgument("surface " + s.name + " has negative genus");
    if (lattice.empty()) continue;
    lattice.pairing.require(s.vector, ("surface " + s.name).c_str());
    auto const q = lattice.pairing.square(s.vector);
    if (q != s.square)
      throw InvalidArgument("surface " + s.name + " declares square " + std::to_string(s.square) +
                            " but its vector has square " + std::to_string(q));
  }
}

// Finite map from classes to nonzero SW' values.
class BasicClassSet {
 public:
  using Map = std::map<ClassVector, std::int64_t>;

  BasicClassSet() = default;
  BasicClassSet(std::initializer_list<std::pair<ClassVector const, std::int64_t>> init) {
    for (auto const& [k, v] : init) set(k, v);
  }

  // A zero value removes the class.
  void set(ClassVector k, std::int64_t value) {
    if (!entries_.empty() && entries_.begin()->first.size() != k.size())
      throw InvalidArgument("basic class dimension mismatch");
    if (value == 0)
      entries_.erase(k);
    else
      entries_[std::move(k)] = value;
  }

  std::int64_t value(ClassVector const& k) const {
    auto it = entries_.find(k);
    return it == entries_.end() ? 0 : it->second;
  }

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  Map const& entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  std::size_t dimension() const noexcept { return entries_.empty() ? 0 : entries_.begin()->first.size(); }

  // -k is present whenever k is.
  bool negation_closed() const {
    for (auto const& [k, v] : entries_) {
      ClassVector neg = k;
      for (auto& c : neg) c = -c;
      if (!entries_.contains(neg)) return false;
    }
    return true;
  }

  friend bool operator==(BasicClassSet const&, BasicClassSet const&) = default;

 private:
  Map entries_;
};

inline std::string to_string(ClassVector const& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace reveng
