#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace skein {

// Perfect matching on 2n cyclically ordered points, kept in the
// lexicographically smallest partner encoding over all rotations.
class ChordDiagram {
 public:
  ChordDiagram() = default;
  // partner[p] = q with partner[q] = p, 0-based. Throws std::invalid_argument
  // unless this is a fixed-point-free involution.
  explicit ChordDiagram(std::vector<int> partner);

  // "1-3,2-4" with 1-based points. Throws ParseError.
  static ChordDiagram parse(std::string_view text);

  int chords() const noexcept { return static_cast<int>(partner_.size() / 2); }
  const std::vector<int>& partner() const noexcept { return partner_; }
  // Rotate every point by k positions, then canonicalize.
  ChordDiagram rotated(int k) const;

  // Canonical matching, 1-based: "1-3,2-4".
  std::string to_string() const;

  friend auto operator<=>(const ChordDiagram&, const ChordDiagram&) = default;
  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;

 private:
  std::vector<int> partner_;
};

// Lexicographically minimal rotation of a partner array.
std::vector<int> canonical_partner(const std::vector<int>& partner);

using ChordCounts = std::map<ChordDiagram, long>;

// Sum over all m^{2n} lifts of D to the m-fold cover of the circle: each
// endpoint picks a sheet, the lifted points are ordered by (sheet, position).
ChordCounts psi_chords(const ChordDiagram& d, int m);
// Single-threaded recursive enumeration kept as the reference.
ChordCounts psi_chords_reference(const ChordDiagram& d, int m);

}  // namespace skein
