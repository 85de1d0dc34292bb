#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace legadj {

/// Raised by the type and germ parsers. `position()` is the 0-based offset
/// into the input where the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " +
                           std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/*!
  Formal commutative product A_{v1}^{k1} ... A_{vp}^{kp} of A-type symbols.

  Stored as a map from index v >= 1 to exponent k >= 1. The empty product is
  the type "1" (a point with no preimages).
*/
class MultisingularityType {
 public:
  using Exponents = std::map<int, int>;

  MultisingularityType() = default;
  explicit MultisingularityType(Exponents exponents);

  static MultisingularityType single(int index, int exponent = 1);

  const Exponents& exponents() const noexcept { return exponents_; }
  bool is_trivial() const noexcept { return exponents_.empty(); }

  // 0 when the index is absent.
  int exponent(int index) const noexcept;

  // Sum over factors of (index + 1) * exponent.
  int codim() const noexcept;

  // Total number of factors counted with multiplicity.
  int factor_count() const noexcept;

  // Indices repeated by exponent, ascending: A1^2 A3 -> {1, 1, 3}.
  std::vector<int> factor_list() const;

  MultisingularityType operator*(const MultisingularityType& other) const;

  friend bool operator==(const MultisingularityType&,
                         const MultisingularityType&) = default;

 private:
  Exponents exponents_;
};

/// D_mu^delta germ. For odd mu the stored delta is always +1.
class DGerm {
 public:
  DGerm(int mu, int delta);

  int mu() const noexcept { return mu_; }
  int delta() const noexcept { return delta_; }
  bool is_odd() const noexcept { return mu_ % 2 != 0; }

  friend bool operator==(const DGerm&, const DGerm&) = default;

 private:
  int mu_;
  int delta_;
};

/*!
  Parity split of a multisingularity type.

  even_part holds (alpha, i) pairs for even indices (odd root multiplicity
  alpha + 1), odd_part holds (beta, j) pairs for odd indices (even root
  multiplicity). Both are ascending by index.
*/
struct Profile {
  std::vector<std::pair<int, int>> even_part;
  std::vector<std::pair<int, int>> odd_part;
  int m1 = 0;
  int m2 = 0;
  int a1 = 0;
  int a3 = 0;
  int codim = 0;

  MultisingularityType to_type() const;

  friend bool operator==(const Profile&, const Profile&) = default;
};

MultisingularityType parse_type(std::string_view text);
std::string format_type(const MultisingularityType& type);

DGerm parse_germ(std::string_view text);
std::string format_germ(const DGerm& germ);

Profile profile_of(const MultisingularityType& type);

/// type / factor, or nullopt when factor does not divide type.
std::optional<MultisingularityType> divide(const MultisingularityType& type,
                                           const MultisingularityType& factor);

}  // namespace legadj
