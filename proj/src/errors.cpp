#include "rotbraid/errors.hpp"

namespace rotbraid {

const char* errc_name(errc code) {
  switch (code) {
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::strand_count_mismatch: return "StrandCountMismatch";
    case errc::invalid_pair: return "InvalidPair";
    case errc::invalid_index: return "InvalidIndex";
    case errc::unsupported_strand_count: return "UnsupportedStrandCount";
    case errc::not_pure: return "NotPure";
    case errc::invalid_class: return "InvalidClass";
    case errc::zero_axis: return "ZeroAxis";
    case errc::out_of_range: return "OutOfRange";
    case errc::not_closed: return "NotClosed";
    case errc::numerical_ambiguity: return "NumericalAmbiguity";
    case errc::sparse_sampling: return "SparseSampling";
    case errc::not_normalizable: return "NotNormalizable";
    case errc::degenerate_triangle: return "DegenerateTriangle";
    case errc::not_anchored: return "NotAnchored";
    case errc::no_clear_pole: return "NoClearPole";
    case errc::pole_collision: return "PoleCollision";
    case errc::degenerate_crossing: return "DegenerateCrossing";
    case errc::triple_crossing: return "TripleCrossing";
    case errc::not_pure_result: return "NotPureResult";
    case errc::disagreement: return "Disagreement";
    case errc::bad_certificate: return "BadCertificate";
    case errc::parse_error: return "ParseError";
  }
  return "Error";
}

}  // namespace rotbraid
