#ifndef OPUCLAB_COEFFS_HPP
#define OPUCLAB_COEFFS_HPP

#include <cstdint>
#include <filesystem>
#include <vector>

#include "core/util.hpp"

namespace opuclab {

// A point of the unit circle, stored as its normalized angle in [0, 2*pi).
class CirclePoint {
 public:
  CirclePoint() = default;
  explicit CirclePoint(double theta) : angle_(normalize_angle(theta)) {}
  double angle() const { return angle_; }
  cplx value() const { return unit_circle(angle_); }
  friend auto operator<=>(const CirclePoint& a, const CirclePoint& b) = default;

 private:
  double angle_ = 0.0;
};

// A sequence of Verblunsky coefficients alpha_n in the open unit disk.  This
// is the sole input describing a measure on the circle.  Sequences are
// immutable after construction and cheap to copy; evaluation is a pure
// function of the index, including the seeded random kind.
class VerblunskySequence {
 public:
  enum class Kind { zero, explicit_list, sparse, random_seeded };

  // alpha_n == 0 for every n.
  static VerblunskySequence zero();

  // alpha_n = values[n] for n < values.size(); out of range is an error.
  static VerblunskySequence explicit_list(std::vector<cplx> values);

  // alpha_n = values[l] iff n == positions[l], else 0.  Positions must be
  // nonnegative and strictly increasing.
  static VerblunskySequence sparse(std::vector<cplx> values,
                                   std::vector<std::int64_t> positions);

  // alpha_n drawn uniformly from the disk of the given radius < 1, derived
  // from (seed, n) so repeated evaluation agrees exactly.
  static VerblunskySequence random_in_disk(double radius, std::uint64_t seed);

  Kind kind() const { return kind_; }
  // Number of stored entries (explicit length or sparse support size); the
  // zero and random kinds are unbounded and report -1.
  std::int64_t stored_count() const;

  cplx coefficient(std::int64_t n) const;

  const std::vector<cplx>& values() const { return values_; }
  const std::vector<std::int64_t>& positions() const { return positions_; }
  double radius() const { return radius_; }
  std::uint64_t seed() const { return seed_; }

  // Returns a sparse sequence extended by one more perturbation.  Used by the
  // sparse construction, which grows its prefix level by level.
  VerblunskySequence with_appended(cplx value, std::int64_t position) const;

 private:
  VerblunskySequence() = default;
  Kind kind_ = Kind::zero;
  std::vector<cplx> values_;
  std::vector<std::int64_t> positions_;  // sparse kind only
  double radius_ = 0.0;                  // random kind only
  std::uint64_t seed_ = 0;               // random kind only
};

// Coefficient file format: UTF-8 text, one `index re im` entry per line with
// decimal literals, lines starting with `#` ignored.  A file whose indices
// are exactly 0..k-1 loads as an explicit list; anything else loads as a
// sparse sequence.  An empty file is the length-0 explicit list.
VerblunskySequence load_sequence(const std::filesystem::path& path);
void save_sequence(const VerblunskySequence& seq, const std::filesystem::path& path);

// The text that save_sequence writes (exposed for digests and tests).
std::string sequence_to_text(const VerblunskySequence& seq);
VerblunskySequence sequence_from_text(const std::string& text, const std::string& origin);

}  // namespace opuclab

#endif
