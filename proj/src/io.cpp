#include "rotbraid/io.hpp"

namespace rotbraid {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw_error(errc::parse_error, what); }

json require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

Vec3 vec3_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() ||
      !j[2].is_number())
    bad("expected a 3-vector");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json vec3_to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

}  // namespace

json braid_word_to_json(const BraidWord& w) {
  return json{{"n", w.strand_count()}, {"word", w.letters()}};
}

BraidWord braid_word_from_json(const json& j) {
  json n = require(j, "n");
  json word = require(j, "word");
  if (!n.is_number_integer() || !word.is_array()) bad("braid word wants integer n and array word");
  std::vector<int> letters;
  letters.reserve(word.size());
  for (const auto& l : word) {
    if (!l.is_number_integer()) bad("braid letters must be integers");
    letters.push_back(l.get<int>());
  }
  try {
    return BraidWord(n.get<int>(), std::move(letters));
  } catch (const Error& e) {
    bad(e.what());
  }
}

json path_to_json(const RotationPath& p) {
  json segs = json::array();
  for (const Segment& s : p.segments())
    segs.push_back(json{{"axis", vec3_to_json(s.axis)}, {"angle", s.angle}});
  return json{{"format", "segments"}, {"segments", segs}};
}

RotationPath path_from_json(const json& j) {
  json fmt = require(j, "format");
  if (!fmt.is_string()) bad("format must be a string");
  std::string format = fmt.get<std::string>();
  if (format == "segments") {
    json segs = require(j, "segments");
    if (!segs.is_array()) bad("segments must be an array");
    std::vector<Segment> out;
    out.reserve(segs.size());
    for (const auto& s : segs) {
      json angle = require(s, "angle");
      if (!angle.is_number()) bad("angle must be a number");
      out.push_back({vec3_from_json(require(s, "axis")), angle.get<double>()});
    }
    return path_from_segments(out);  // domain errors (ZeroAxis) pass through
  }
  if (format == "samples") {
    json qs = require(j, "quaternions");
    if (!qs.is_array()) bad("quaternions must be an array");
    std::vector<Quat> samples;
    samples.reserve(qs.size());
    for (const auto& q : qs) {
      if (!q.is_array() || q.size() != 4) bad("each quaternion is [w,x,y,z]");
      for (const auto& c : q)
        if (!c.is_number()) bad("quaternion components must be numbers");
      samples.push_back(
          {q[0].get<double>(), q[1].get<double>(), q[2].get<double>(), q[3].get<double>()});
    }
    return ingest_samples(samples);
  }
  bad("unknown path format '" + format + "'");
}

namespace {

const char* move_op_name(MoveKind k) {
  switch (k) {
    case MoveKind::free_insert: return "FreeInsert";
    case MoveKind::free_cancel: return "FreeCancel";
    case MoveKind::artin_replace: return "ArtinReplace";
    case MoveKind::flip_insert: return "FlipInsert";
    case MoveKind::flip_delete: return "FlipDelete";
  }
  return "?";
}

}  // namespace

json certificate_to_json(const Certificate& c) {
  json moves = json::array();
  for (const Move& m : c.moves) {
    json jm{{"op", move_op_name(m.kind)}, {"pos", m.pos}};
    switch (m.kind) {
      case MoveKind::free_insert:
        jm["index"] = m.index;
        jm["sign"] = m.sign;
        break;
      case MoveKind::free_cancel:
        break;
      case MoveKind::artin_replace:
        jm["dir"] = m.left_to_right ? "LtoR" : "RtoL";
        break;
      case MoveKind::flip_insert:
      case MoveKind::flip_delete:
        jm["flip"] = m.index;
        jm["sign"] = m.sign;
        break;
    }
    moves.push_back(std::move(jm));
  }
  return json{{"n", c.strand_count},
              {"start", c.start.letters()},
              {"end", c.end.letters()},
              {"moves", moves}};
}

Certificate certificate_from_json(const json& j) {
  json n = require(j, "n");
  if (!n.is_number_integer()) bad("certificate wants integer n");
  int strand_count = n.get<int>();

  auto word_from = [&](const char* key) {
    json arr = require(j, key);
    if (!arr.is_array()) bad(std::string(key) + " must be an array");
    std::vector<int> letters;
    for (const auto& l : arr) {
      if (!l.is_number_integer()) bad("letters must be integers");
      letters.push_back(l.get<int>());
    }
    try {
      return BraidWord(strand_count, std::move(letters));
    } catch (const Error& e) {
      bad(e.what());
    }
  };

  Certificate c;
  c.strand_count = strand_count;
  c.start = word_from("start");
  c.end = word_from("end");

  json moves = require(j, "moves");
  if (!moves.is_array()) bad("moves must be an array");
  for (const auto& jm : moves) {
    json op = require(jm, "op");
    json pos = require(jm, "pos");
    if (!op.is_string() || !pos.is_number_integer()) bad("move wants string op and integer pos");
    Move m;
    m.pos = pos.get<int>();
    std::string name = op.get<std::string>();
    auto int_field = [&](const char* key) {
      json v = require(jm, key);
      if (!v.is_number_integer()) bad(std::string(key) + " must be an integer");
      return v.get<int>();
    };
    if (name == "FreeInsert") {
      m.kind = MoveKind::free_insert;
      m.index = int_field("index");
      m.sign = int_field("sign");
    } else if (name == "FreeCancel") {
      m.kind = MoveKind::free_cancel;
    } else if (name == "ArtinReplace") {
      m.kind = MoveKind::artin_replace;
      json dir = require(jm, "dir");
      if (!dir.is_string()) bad("dir must be a string");
      std::string d = dir.get<std::string>();
      if (d != "LtoR" && d != "RtoL") bad("dir must be LtoR or RtoL");
      m.left_to_right = d == "LtoR";
    } else if (name == "FlipInsert" || name == "FlipDelete") {
      m.kind = name == "FlipInsert" ? MoveKind::flip_insert : MoveKind::flip_delete;
      m.index = int_field("flip");
      m.sign = int_field("sign");
    } else {
      bad("unknown move op '" + name + "'");
    }
    c.moves.push_back(m);
  }
  return c;
}

json classification_report_to_json(const ClassificationReport& r) {
  return json{{"class", to_string(r.result)},
              {"braid_word", r.braid_word.letters()},
              {"exponent_sum", exponent_sum(r.braid_word)},
              {"exponent_sum_mod4", r.cls.esum_mod4},
              {"lift_class", to_string(r.lift_route)},
              {"agreement", r.agreement},
              {"pole", vec3_to_json(r.pole)},
              {"samples", r.samples}};
}

json spherical_braid_to_json(const SphericalBraid& sb) {
  json strands = json::array();
  for (const auto& strand : sb.strands) {
    json pts = json::array();
    for (const Vec3& x : strand) pts.push_back(vec3_to_json(x));
    strands.push_back(std::move(pts));
  }
  return json{{"times", sb.times}, {"strands", strands}};
}

}  // namespace rotbraid
