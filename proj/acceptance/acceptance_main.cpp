// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code is the number of
// failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rotbraid/artin.hpp"
#include "rotbraid/certificate.hpp"
#include "rotbraid/classify.hpp"
#include "rotbraid/diagram.hpp"
#include "rotbraid/extract.hpp"
#include "rotbraid/quotient.hpp"

using namespace rotbraid;

namespace {

constexpr double kPi = 3.14159265358979323846;

int g_failures = 0;

void criterion(int number, const std::string& name, double time_limit_s,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit_s > 0 && secs > time_limit_s) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("exceeded time limit of ") +
              std::to_string(time_limit_s) + " s";
  }
  std::printf("%s  %2d. %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              secs, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::pair<std::vector<int>, int> class_key(const BraidWord& w) {
  SphereBraidClass c = sphere_class(w);
  return {c.perm.images(), c.esum_mod4};
}

double max_pointwise_error(const RotationPath& a, const RotationPath& b,
                           const std::vector<double>& times) {
  double worst = 0.0;
  for (double t : times) {
    Mat3 ma = a.rotation_at(t), mb = b.rotation_at(t);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        worst = std::max(worst, std::fabs(ma[i][j] - mb[i][j]));
  }
  return worst;
}

BraidWord extract_with_retries(const SphericalBraid& sb, const Vec3& pole,
                               std::uint64_t seed) {
  Rng rng(seed);
  double spin = 0.0;
  for (int attempt = 0;; ++attempt) {
    try {
      return extract_word(project(sb, pole, spin));
    } catch (const Error& e) {
      if ((e.code() != errc::degenerate_crossing && e.code() != errc::triple_crossing) ||
          attempt >= 8)
        throw;
      spin = rng.uniform(0.01, 0.12);
    }
  }
}

}  // namespace

int main() {
  criterion(1, "conjugation table at n = 3 verified by the word-problem oracle", 1.0,
            [](std::string& detail) {
              VerificationReport rep = verify_lemma1();
              int pass = 0;
              for (const auto& c : rep.checks) pass += c.verified;
              detail = std::to_string(pass) + "/" + std::to_string(rep.checks.size()) +
                       " identities";
              return rep.all_passed() && rep.checks.size() == 10;
            });

  criterion(2, "conjugation families verified for n = 3..7", 10.0,
            [](std::string& detail) {
              int total = 0;
              bool ok = true;
              for (int n = 3; n <= 7; ++n) {
                VerificationReport rep = verify_lemma1_general(n);
                total += static_cast<int>(rep.checks.size());
                ok = ok && rep.all_passed();
              }
              detail = std::to_string(total) + " identities across n = 3..7";
              return ok;
            });

  criterion(3, "twist-generator identities and flip words are letter-exact", 1.0,
            [](std::string& detail) {
              bool eq = equal_in_group(make_word(3, {2, 1, 1, -2}),
                                       make_word(3, {-1, 2, 2, 1}));
              bool letters = flip(1, 3).letters() == std::vector<int>{1, 2, 2, 1} &&
                             flip(2, 3).letters() == std::vector<int>{1, 1, 2, 2} &&
                             flip(3, 3).letters() == std::vector<int>{2, 1, 1, 2};
              // n = 3 specialization of the general band generators
              bool band = pure_generator(1, 2, 3).letters() == std::vector<int>{1, 1} &&
                          pure_generator(1, 3, 3).letters() ==
                              std::vector<int>{2, 1, 1, -2} &&
                          pure_generator(2, 3, 3).letters() == std::vector<int>{2, 2};
              detail = "oracle equality plus letter-for-letter match";
              return eq && letters && band;
            });

  criterion(4, "fourth-power and squared-generator certificates replay", 30.0,
            [](std::string& detail) {
              const BraidWord empty(3), s1s1(3, {1, 1});
              struct Case {
                BraidWord lhs, rhs;
              };
              std::vector<Case> cases = {
                  {BraidWord(3, {1, 1, 1, 1}), empty},
                  {BraidWord(3, {2, 2, 2, 2}), empty},
                  {s1s1, BraidWord(3, {2, 2})},
                  {s1s1, BraidWord(3, {-1, -1})},
              };
              std::uint64_t states = 0;
              for (const Case& c : cases) {
                CertifyResult res = certify_equal_mod_R(c.lhs, c.rhs);
                states += res.states_explored;
                if (!res.found() || !replay_certificate(*res.certificate)) return false;
              }
              detail = std::to_string(cases.size()) + " certificates, " +
                       std::to_string(states) + " states total";
              return true;
            });

  criterion(5, "squared full twist certified in the flip subgroup at n = 3", 60.0,
            [](std::string& detail) {
              BraidWord d = full_twist(3);
              CertifyResult res = certify_in_R(compose(d, d));
              if (!res.found() || !replay_certificate(*res.certificate)) return false;
              detail = std::to_string(res.certificate->moves.size()) + " moves, " +
                       std::to_string(res.states_explored) + " states";
              // n = 4 is best effort; an inconclusive search is acceptable and
              // reported here with a bounded budget
              BraidWord d4 = full_twist(4);
              CertifyResult res4 =
                  certify_in_R(compose(d4, d4), SearchBudget{200'000, 8});
              detail += res4.found() ? "; n = 4: certificate found"
                                     : "; n = 4: inconclusive (best effort, " +
                                           std::to_string(res4.states_explored) +
                                           " states)";
              return true;
            });

  criterion(6, "a full turn about the third marked point lands in the twist class",
            30.0, [](std::string& detail) {
              RotationPath p = path_from_segments({{base_points()[2], 2 * kPi}});
              BraidWord w = braid_of_path(p);
              SphereBraidClass c = sphere_class(w);
              detail = "word \"" + format_word_text(w) + "\", exponent sum mod 4 = " +
                       std::to_string(c.esum_mod4);
              return is_pure(w) && c.perm.is_identity() && c.esum_mod4 == 2;
            });

  criterion(7, "belt-trick parity on 200 seeded paths, both routes agreeing", 120.0,
            [](std::string& detail) {
              int agree = 0;
              for (int trial = 0; trial < 200; ++trial) {
                int k = trial % 7;
                bool wiggle = trial % 2 == 1;
                RotationPath p = random_closed_path(42000 + trial, k, wiggle);
                ClassificationReport rep = classify(p);
                HomotopyClass expect =
                    k % 2 == 0 ? HomotopyClass::trivial : HomotopyClass::nontrivial;
                if (rep.agreement && rep.result == expect && rep.lift_route == expect)
                  ++agree;
              }
              detail = std::to_string(agree) + "/200 in full agreement";
              return agree == 200;
            });

  criterion(8, "class is pole-independent on 20 paths x 5 poles", 120.0,
            [](std::string& detail) {
              int stable = 0;
              for (int trial = 0; trial < 20; ++trial) {
                RotationPath p = random_closed_path(52000 + trial, trial % 5, trial % 2 == 0);
                SphericalBraid sb = trace(p);
                std::set<std::pair<std::vector<int>, int>> classes;
                int poles = 0;
                std::uint64_t pole_seed = 0;
                while (poles < 5) {
                  Vec3 pole = Rng(9000 + 31 * trial + pole_seed++).unit_vector();
                  double clear = kPi;
                  for (const auto& strand : sb.strands)
                    for (const Vec3& x : strand)
                      clear = std::min(clear, angle_between(x, pole));
                  if (clear < 0.05) continue;
                  ++poles;
                  classes.insert(class_key(extract_with_retries(sb, pole, 13)));
                }
                if (classes.size() == 1) ++stable;
              }
              detail = std::to_string(stable) + "/20 paths pole-stable";
              return stable == 20;
            });

  criterion(9, "reconstruction round trip within 1e-6 on 50 paths", 120.0,
            [](std::string& detail) {
              int good = 0;
              double worst = 0.0;
              for (int trial = 0; trial < 50; ++trial) {
                RotationPath p = random_closed_path(62000 + trial, trial % 6, trial % 3 != 0);
                SphericalBraid sb = trace(p);
                RotationPath rec = reconstruct_path(sb);
                double err = max_pointwise_error(p, rec, sb.times);
                worst = std::max(worst, err);
                bool classes_agree =
                    lift_class(rec) == lift_class(p) &&
                    classify_via_braid(rec) == classify_via_braid(p);
                if (err < 1e-6 && classes_agree) ++good;
              }
              std::ostringstream os;
              os << good << "/50 round trips, worst pointwise error " << worst;
              detail = os.str();
              return good == 50;
            });

  criterion(10, "invariant property batteries (>= 1000 generated cases)", 120.0,
            [](std::string& detail) {
              int cases = 0;
              bool ok = true;
              Rng rng(72000);

              auto random_word = [&](int n, int max_len) {
                int len = static_cast<int>(rng.below(max_len + 1));
                std::vector<int> letters;
                for (int k = 0; k < len; ++k) {
                  int idx = 1 + static_cast<int>(rng.below(n - 1));
                  letters.push_back(rng.next_double() < 0.5 ? idx : -idx);
                }
                return BraidWord(n, letters);
              };

              // exponent-sum and permutation homomorphisms
              for (int t = 0; t < 300; ++t) {
                BraidWord a = random_word(4, 12), b = random_word(4, 12);
                ok = ok &&
                     exponent_sum(compose(a, b)) == exponent_sum(a) + exponent_sum(b) &&
                     permutation_of(compose(a, b)) ==
                         permutation_of(a).then(permutation_of(b));
                ++cases;
              }
              // free-reduction neutrality (permutation, exponent sum, oracle)
              for (int t = 0; t < 200; ++t) {
                BraidWord w = random_word(3, 14);
                BraidWord r = free_reduce(w);
                ok = ok && permutation_of(r) == permutation_of(w) &&
                     exponent_sum(r) == exponent_sum(w);
                if (t % 10 == 0) ok = ok && equal_in_group(w, r);
                ++cases;
              }
              // frame equivariance below 1e-9
              for (int t = 0; t < 150; ++t) {
                Vec3 p1 = rng.unit_vector(), p2 = rng.unit_vector(), p3 = rng.unit_vector();
                if (0.5 * (p2 - p1).cross(p3 - p1).norm() < 1e-3) continue;
                Quat r = Quat::from_axis_angle(rng.unit_vector(), rng.uniform(0, 2 * kPi));
                TriangleFrame f0 = frame_of_triangle(p1, p2, p3);
                TriangleFrame f1 =
                    frame_of_triangle(r.rotate(p1), r.rotate(p2), r.rotate(p3));
                ok = ok && (f1.e1 - r.rotate(f0.e1)).norm() < 1e-9 &&
                     (f1.e2 - r.rotate(f0.e2)).norm() < 1e-9 &&
                     (f1.e3 - r.rotate(f0.e3)).norm() < 1e-9;
                ++cases;
              }
              // radius law below 1e-9 across traced paths
              for (int t = 0; t < 6; ++t) {
                SphericalBraid sb = trace(random_closed_path(81000 + t, 1 + t % 3, true));
                for (std::size_t k = 0; k < sb.sample_count(); k += 7) {
                  for (int i = 0; i < 3; ++i)
                    ok = ok && std::fabs(sb.strands[i][k].norm() -
                                         (1.0 - sb.times[k] / 2.0)) < 1e-9;
                  ++cases;
                }
              }
              // certificate replay exactness on randomly generated move chains
              for (int t = 0; t < 150; ++t) {
                BraidWord start = random_word(3, 8);
                std::vector<int> letters = start.letters();
                Certificate cert;
                cert.strand_count = 3;
                cert.start = start;
                for (int step = 0; step < 5; ++step) {
                  int len = static_cast<int>(letters.size());
                  Move m;
                  if (rng.next_double() < 0.5)
                    m = {MoveKind::free_insert, static_cast<int>(rng.below(len + 1)),
                         1 + static_cast<int>(rng.below(2)),
                         rng.next_double() < 0.5 ? 1 : -1, true};
                  else
                    m = {MoveKind::flip_insert, static_cast<int>(rng.below(len + 1)),
                         1 + static_cast<int>(rng.below(3)),
                         rng.next_double() < 0.5 ? 1 : -1, true};
                  letters = apply_move(letters, m, 3);
                  cert.moves.push_back(m);
                }
                cert.end = BraidWord(3, letters);
                ok = ok && replay_certificate(cert);
                ++cases;
              }
              // searched certificates replay too
              for (int t = 0; t < 120; ++t) {
                BraidWord w = random_word(3, 6);
                CertifyResult res = certify_equal_mod_R(w, canonical_rep(sphere_class(w)));
                ok = ok && res.found() && replay_certificate(*res.certificate);
                ++cases;
              }
              // class parity invariant
              for (int t = 0; t < 100; ++t) {
                ok = ok && sphere_class(random_word(3, 12)).parity_consistent();
                ++cases;
              }

              detail = std::to_string(cases) + " generated cases";
              return ok && cases >= 1000;
            });

  if (g_failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return g_failures;
}
