#include "rotbraid/certificate.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_map>

#include "rotbraid/quotient.hpp"

namespace rotbraid {

namespace {

int letter_sign(int l) { return l > 0 ? 1 : -1; }

std::vector<int> flip_letters(int i, int sign, int n) {
  BraidWord f = flip(i, n);
  if (sign < 0) f = inverse(f);
  return f.letters();
}

}  // namespace

std::vector<int> apply_move(const std::vector<int>& letters, const Move& m, int n) {
  const int L = static_cast<int>(letters.size());
  std::vector<int> out;
  switch (m.kind) {
    case MoveKind::free_insert: {
      if (m.pos < 0 || m.pos > L)
        throw_error(errc::bad_certificate, "FreeInsert position out of range");
      if (m.index < 1 || m.index > n - 1 || (m.sign != 1 && m.sign != -1))
        throw_error(errc::bad_certificate, "FreeInsert bad letter");
      out = letters;
      out.insert(out.begin() + m.pos, {m.sign * m.index, -m.sign * m.index});
      return out;
    }
    case MoveKind::free_cancel: {
      if (m.pos < 0 || m.pos + 1 >= L)
        throw_error(errc::bad_certificate, "FreeCancel position out of range");
      if (letters[m.pos] != -letters[m.pos + 1])
        throw_error(errc::bad_certificate, "FreeCancel pair is not inverse");
      out = letters;
      out.erase(out.begin() + m.pos, out.begin() + m.pos + 2);
      return out;
    }
    case MoveKind::artin_replace: {
      if (m.pos < 0 || m.pos + 2 >= L)
        throw_error(errc::bad_certificate, "ArtinReplace position out of range");
      int a = letters[m.pos], b = letters[m.pos + 1], c = letters[m.pos + 2];
      if (a != c || letter_sign(a) != letter_sign(b) ||
          std::abs(std::abs(a) - std::abs(b)) != 1)
        throw_error(errc::bad_certificate, "ArtinReplace pattern mismatch");
      if ((std::abs(a) < std::abs(b)) != m.left_to_right)
        throw_error(errc::bad_certificate, "ArtinReplace direction mismatch");
      out = letters;
      out[m.pos] = b;
      out[m.pos + 1] = a;
      out[m.pos + 2] = b;
      return out;
    }
    case MoveKind::flip_insert: {
      if (m.pos < 0 || m.pos > L)
        throw_error(errc::bad_certificate, "FlipInsert position out of range");
      std::vector<int> f = flip_letters(m.index, m.sign, n);
      out = letters;
      out.insert(out.begin() + m.pos, f.begin(), f.end());
      return out;
    }
    case MoveKind::flip_delete: {
      std::vector<int> f = flip_letters(m.index, m.sign, n);
      int len = static_cast<int>(f.size());
      if (m.pos < 0 || m.pos + len > L)
        throw_error(errc::bad_certificate, "FlipDelete position out of range");
      if (!std::equal(f.begin(), f.end(), letters.begin() + m.pos))
        throw_error(errc::bad_certificate, "FlipDelete subword mismatch");
      out = letters;
      out.erase(out.begin() + m.pos, out.begin() + m.pos + len);
      return out;
    }
  }
  throw_error(errc::bad_certificate, "unknown move kind");
}

bool replay_certificate(const Certificate& cert) {
  if (cert.start.strand_count() != cert.strand_count ||
      cert.end.strand_count() != cert.strand_count)
    return false;
  std::vector<int> w = cert.start.letters();
  try {
    for (const Move& m : cert.moves) w = apply_move(w, m, cert.strand_count);
  } catch (const Error&) {
    return false;
  }
  return w == cert.end.letters();
}

namespace {

// ---- search internals ------------------------------------------------------

struct MoveRecorder {
  std::vector<int> word;
  std::vector<Move> moves;
  int n;

  void apply(Move m) {
    word = apply_move(word, m, n);
    moves.push_back(m);
  }

  // leftmost-first free cancellation, recorded move by move
  void reduce() {
    bool again = true;
    while (again) {
      again = false;
      for (int p = 0; p + 1 < static_cast<int>(word.size()); ++p) {
        if (word[p] == -word[p + 1]) {
          apply({MoveKind::free_cancel, p, 0, 1, true});
          again = true;
          break;
        }
      }
    }
  }
};

Move artin_move(const std::vector<int>& w, int pos) {
  return {MoveKind::artin_replace, pos, 0, 1, std::abs(w[pos]) < std::abs(w[pos + 1])};
}

struct Edge {
  std::vector<int> word;  // freely reduced result
  std::vector<Move> moves;
};

// All one-step macro edges out of a freely reduced word. Each edge is a short
// list of elementary moves whose net effect, after recorded cancellations, is
// the returned reduced word.
std::vector<Edge> neighbors(const std::vector<int>& w, int n) {
  std::vector<Edge> out;
  const int L = static_cast<int>(w.size());
  auto emit = [&](MoveRecorder rec) { out.push_back({std::move(rec.word), std::move(rec.moves)}); };

  for (int p = 0; p + 2 < L; ++p) {
    int a = w[p], b = w[p + 1], c = w[p + 2];
    int ia = std::abs(a), ib = std::abs(b), ic = std::abs(c);
    if (ia != ic || std::abs(ia - ib) != 1) continue;
    int sa = letter_sign(a), sb = letter_sign(b), sc = letter_sign(c);
    if (a == c && sa == sb) {  // same-sign braid triple
      MoveRecorder rec{w, {}, n};
      rec.apply(artin_move(rec.word, p));
      rec.reduce();
      emit(std::move(rec));
    } else if (sa == sb && sa != sc) {
      // (i j i^-)^s -> (j^- i j)^s: insert the j pair on the left, replace,
      // cancel on the right
      MoveRecorder rec{w, {}, n};
      rec.apply({MoveKind::free_insert, p, ib, -sa, true});
      rec.apply(artin_move(rec.word, p + 1));
      rec.apply({MoveKind::free_cancel, p + 3, 0, 1, true});
      rec.reduce();
      emit(std::move(rec));
    } else if (sb == sc && sa != sb) {
      // (i^- j i)^s -> (j i j^-)^s
      MoveRecorder rec{w, {}, n};
      rec.apply({MoveKind::free_insert, p + 3, ib, sb, true});
      rec.apply(artin_move(rec.word, p + 1));
      rec.apply({MoveKind::free_cancel, p, 0, 1, true});
      rec.reduce();
      emit(std::move(rec));
    }
  }

  for (int i = 1; i <= n; ++i) {
    for (int sign : {1, -1}) {
      std::vector<int> f = flip_letters(i, sign, n);
      int len = static_cast<int>(f.size());
      for (int p = 0; p + len <= L; ++p) {
        if (std::equal(f.begin(), f.end(), w.begin() + p)) {
          MoveRecorder rec{w, {}, n};
          rec.apply({MoveKind::flip_delete, p, i, sign, true});
          rec.reduce();
          emit(std::move(rec));
        }
      }
      for (int p = 0; p <= L; ++p) {
        MoveRecorder rec{w, {}, n};
        rec.apply({MoveKind::flip_insert, p, i, sign, true});
        rec.reduce();
        emit(std::move(rec));
      }
    }
  }
  return out;
}

std::string word_key(const std::vector<int>& w) {
  std::string s;
  s.reserve(w.size());
  for (int l : w) s.push_back(static_cast<char>(100 + l));
  return s;
}

struct SearchOutcome {
  bool found = false;
  std::vector<Move> chain;
  std::uint64_t states = 0;
};

// Best-first search from `start` to the empty word over freely reduced
// states, iteratively deepening the word-length cap. Deterministic: the
// frontier is ordered by (length, lexicographic key, insertion id).
SearchOutcome search_to_empty(const std::vector<int>& start, int n,
                              const SearchBudget& budget) {
  SearchOutcome outcome;
  const int base = static_cast<int>(start.size());

  for (int extra = 0; extra <= budget.max_extra_length; extra += 2) {
    const int cap = base + extra;

    struct Node {
      std::vector<int> word;
      std::uint32_t parent;
      std::vector<Move> edge;
    };
    std::vector<Node> arena;
    arena.push_back({start, 0, {}});

    using QItem = std::tuple<std::size_t, std::string, std::uint32_t>;
    std::priority_queue<QItem, std::vector<QItem>, std::greater<QItem>> pq;
    std::unordered_map<std::string, std::uint32_t> seen;
    seen.emplace(word_key(start), 0);
    pq.emplace(start.size(), word_key(start), 0);

    while (!pq.empty()) {
      if (outcome.states >= budget.max_states) return outcome;
      auto [len, key, id] = pq.top();
      pq.pop();
      ++outcome.states;

      if (arena[id].word.empty()) {
        // stitch the chain root-to-leaf
        std::vector<std::uint32_t> path;
        for (std::uint32_t cur = id; cur != 0; cur = arena[cur].parent)
          path.push_back(cur);
        std::reverse(path.begin(), path.end());
        for (std::uint32_t cur : path)
          outcome.chain.insert(outcome.chain.end(), arena[cur].edge.begin(),
                               arena[cur].edge.end());
        outcome.found = true;
        return outcome;
      }

      for (Edge& e : neighbors(arena[id].word, n)) {
        if (static_cast<int>(e.word.size()) > cap) continue;
        std::string k = word_key(e.word);
        if (seen.contains(k)) continue;
        auto nid = static_cast<std::uint32_t>(arena.size());
        seen.emplace(std::move(k), nid);
        pq.emplace(e.word.size(), word_key(e.word), nid);
        arena.push_back({std::move(e.word), id, std::move(e.moves)});
      }
    }
  }
  return outcome;
}

bool invariants_match(const BraidWord& a, const BraidWord& b) {
  if (a.strand_count() == 3) return sphere_class(a) == sphere_class(b);
  // n = 4: necessary condition only (flips are pure with exponent sum 6)
  if (!(permutation_of(a) == permutation_of(b))) return false;
  int diff = (exponent_sum(a) - exponent_sum(b)) % 6;
  return diff == 0;
}

}  // namespace

CertifyResult certify_equal_mod_R(const BraidWord& w1, const BraidWord& w2,
                                  const SearchBudget& budget) {
  if (w1.strand_count() != w2.strand_count())
    throw_error(errc::strand_count_mismatch,
                std::to_string(w1.strand_count()) + " vs " +
                    std::to_string(w2.strand_count()));
  const int n = w1.strand_count();
  if (n != 3 && n != 4)
    throw_error(errc::unsupported_strand_count,
                "certificate search supports 3 or 4 strands");

  if (!invariants_match(w1, w2)) return {CertifyStatus::invariant_mismatch, {}, 0};

  // Reduce the problem to u -> empty with u = free_reduce(w1 w2^-1): append
  // w2^-1 w2 as nested cancelling pairs (outermost letter first), reduce the
  // prefix, rewrite it away, and the literal copy of w2 remains.
  MoveRecorder rec{w1.letters(), {}, n};
  const auto& w2l = w2.letters();
  for (std::size_t t = 0; t < w2l.size(); ++t) {
    int b = w2l[w2l.size() - 1 - t];
    rec.apply({MoveKind::free_insert, static_cast<int>(w1.size() + t), std::abs(b),
               -letter_sign(b), true});
  }
  // reduce only the prefix w1 w2^-1; the appended copy of w2 must stay intact
  int prefix_len = static_cast<int>(w1.size() + w2l.size());
  bool again = true;
  while (again) {
    again = false;
    for (int p = 0; p + 1 < prefix_len; ++p) {
      if (rec.word[p] == -rec.word[p + 1]) {
        rec.apply({MoveKind::free_cancel, p, 0, 1, true});
        prefix_len -= 2;
        again = true;
        break;
      }
    }
  }
  std::vector<int> u(rec.word.begin(), rec.word.begin() + prefix_len);

  SearchOutcome sr = search_to_empty(u, n, budget);
  if (!sr.found) return {CertifyStatus::budget_exhausted, {}, sr.states};

  Certificate cert;
  cert.strand_count = n;
  cert.start = w1;
  cert.end = w2;
  cert.moves = std::move(rec.moves);
  cert.moves.insert(cert.moves.end(), sr.chain.begin(), sr.chain.end());
  if (!replay_certificate(cert))
    throw_error(errc::bad_certificate, "internal error: assembled certificate fails replay");
  return {CertifyStatus::found, std::move(cert), sr.states};
}

CertifyResult certify_in_R(const BraidWord& w, const SearchBudget& budget) {
  return certify_equal_mod_R(w, BraidWord(w.strand_count()), budget);
}

}  // namespace rotbraid
