#pragma once
#include <iosfwd>
#include <string>
#include <vector>

#include "newtonlab/io.hpp"

namespace nl::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kVerifyFailed = 2;
inline constexpr int kOutOfScope = 3;

// Exit code for a finished result. A failed check exits kVerifyFailed
// unless verify_warn; sets status to ok, verified or mismatch.
int verdict(ResultFile& r, bool verify, bool verify_warn);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nl::cli
