#include "rotbraid/classify.hpp"

#include <sstream>

namespace rotbraid {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

}  // namespace

HomotopyClass classify_via_braid(const RotationPath& p, const ExtractOptions& opts) {
  return z2_class(braid_of_path(p, opts));
}

ClassificationReport classify(const RotationPath& p, const ExtractOptions& opts) {
  ClassificationReport rep;
  ExtractionResult ex = braid_of_path_detailed(p, opts);
  rep.braid_word = ex.word;
  rep.cls = sphere_class(ex.word);
  rep.braid_route = z2_class(ex.word);
  rep.lift_route = lift_class(p);
  rep.pole = ex.pole;
  rep.samples = ex.samples;
  rep.agreement = rep.braid_route == rep.lift_route;
  rep.result = rep.braid_route;
  if (!rep.agreement) {
    std::ostringstream os;
    os << "braid route says " << to_string(rep.braid_route) << " but lift route says "
       << to_string(rep.lift_route) << "; word = " << format_word_text(ex.word)
       << ", exponent sum = " << exponent_sum(ex.word) << ", samples = " << ex.samples
       << ", pole = (" << ex.pole.x << ", " << ex.pole.y << ", " << ex.pole.z << ")";
    throw_error(errc::disagreement, os.str());
  }
  return rep;
}

RotationPath random_closed_path(std::uint64_t seed, int k_turns, bool wiggle) {
  if (k_turns < 0) throw_error(errc::out_of_range, "k_turns must be nonnegative");
  Rng rng(seed);
  std::vector<Segment> segments;
  auto add_excursion = [&] {
    Vec3 axis = rng.unit_vector();
    double angle = rng.uniform(0.3, 1.2);
    segments.push_back({axis, angle});
    segments.push_back({axis, -angle});  // exact reverse: class unchanged
  };
  for (int k = 0; k < k_turns; ++k) {
    if (wiggle) add_excursion();
    segments.push_back({rng.unit_vector(), kTwoPi});
  }
  if (wiggle) add_excursion();
  return RotationPath(std::move(segments));
}

}  // namespace rotbraid
