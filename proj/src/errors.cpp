#include "hopfseq/errors.hpp"

namespace hopfseq {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::parse_error: return "ParseError";
        case Errc::invalid_dimension_sequence: return "InvalidDimensionSequence";
        case Errc::not_an_fgccha: return "NotAnFGCCHA";
        case Errc::no_surjection_exists: return "NoSurjectionExists";
        case Errc::no_embedding_exists: return "NoEmbeddingExists";
        case Errc::not_a_generating_set: return "NotAGeneratingSet";
        case Errc::alphabet_mismatch: return "AlphabetMismatch";
        case Errc::unavailable: return "Unavailable";
        case Errc::not_found: return "NotFound";
        case Errc::internal_error: return "InternalError";
    }
    return "UnknownError";
}

} // namespace hopfseq
