#ifndef HOPFSEQ_ERRORS_HPP
#define HOPFSEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hopfseq {

enum class Errc {
    invalid_argument,          // malformed input (bad csv, bad word, bad flag value)
    parse_error,               // malformed file contents (b-file line, poly text)
    invalid_dimension_sequence, // sequence fails an integrality precondition
    not_an_fgccha,             // dimension sequence is not realizable, used as a host
    no_surjection_exists,      // generator counts violate a >= b
    no_embedding_exists,       // primitive counts violate q <= p
    not_a_generating_set,      // singular leading block / rank failure
    alphabet_mismatch,         // binary op on polys over different alphabets
    unavailable,               // network failure with no cached copy
    not_found,                 // HTTP 404 for a b-file
    internal_error,            // broken invariant; always a bug
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

} // namespace hopfseq

#endif
