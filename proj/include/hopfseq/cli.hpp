#ifndef HOPFSEQ_CLI_HPP
#define HOPFSEQ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hopfseq {

// Runs the command line tool. Exit codes: 0 = YES / success, 1 = negative
// decision, 2 = usage or input error, 3 = environment (network) error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hopfseq

#endif
