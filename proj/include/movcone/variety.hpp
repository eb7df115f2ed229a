#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace movcone {

// Ambient factors P^{n_1} x ... x P^{n_l} and the multidegrees of the
// divisors D_1..D_m cutting out X. Row i of `degrees` is the multidegree of D_i.
struct VarietySpec {
  std::vector<int> factors;
  std::vector<std::vector<int>> degrees;
  std::string name;

  int rank() const { return static_cast<int>(factors.size()); }
  int codim() const { return static_cast<int>(degrees.size()); }
};

// Parses the key/value config format:
//
//   factors = [4, 3, 3]
//   degrees = [[2, 2, 1], [2, 1, 1], [1, 1, 2]]
//   name    = "example"        # optional
//
// Only shape is checked here (rectangular matrix, positive entries, l >= 2).
// Syntax problems throw ParseError with a 1-based line/column.
VarietySpec parse_spec(std::string_view text);
VarietySpec load_spec(const std::filesystem::path& path);

// Every `*.cfg` file directly inside `dir`, in path order.
std::vector<std::pair<std::filesystem::path, VarietySpec>>
load_spec_directory(const std::filesystem::path& dir);

class ValidatedVariety {
public:
  const VarietySpec& spec() const { return spec_; }
  int rank() const { return spec_.rank(); }
  int n() const { return n_; }
  // Indices (0-based) of the factors with n_j = n, ascending.
  const std::vector<int>& J() const { return J_; }
  bool in_J(int j) const;
  int dim() const { return dim_; }
  int codim() const { return spec_.codim(); }
  // codim < n: Bir(X) = Aut(X) acts trivially and Nef(X) = Mov(X).
  bool subcritical() const { return codim() < n_; }
  // Row index of the unique degree-2 entry in column j. Defined only when
  // codim = n and j is in J; anything else throws.
  int carrier2(int j) const;

private:
  friend ValidatedVariety validate(VarietySpec spec);
  VarietySpec spec_;
  int n_ = 0;
  int dim_ = 0;
  std::vector<int> J_;
  std::vector<int> carrier_;  // indexed by factor, -1 outside J
};

ValidatedVariety validate(VarietySpec spec);

} // namespace movcone
