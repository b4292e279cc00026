#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>

#include <json.hpp>

#include "maxties/distributions.hpp"

namespace maxties {

using AnyLaw = std::variant<DiscreteLaw, ContinuousLaw>;

/// Command-line values that may complete a law descriptor.
struct LawFlags {
  std::optional<double> p;
  std::optional<double> mu;
  std::optional<double> b;
  std::optional<std::int64_t> n;
};

/// Builds a law from a descriptor such as
///   {"kind": "geometric", "p": 0.2}
///   {"kind": "geometric", "mu": 100}          (p = 1 - mu/n, needs n)
///   {"kind": "tabulated", "weights": [0.5, 0.5]}
///   {"kind": "gumbel"}
///   {"kind": "uniform", "b": 1}
/// Fields missing from the descriptor are taken from flags.
AnyLaw parse_law(const nlohmann::json& descriptor, const LawFlags& flags = {});

/// The --law argument: a bare kind name, inline JSON, or @path to a JSON file.
nlohmann::json law_descriptor_from_arg(const std::string& arg);

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitDegenerate = 2,
  kExitNumeric = 3,
  kExitVerifyFailed = 4,
};

/// Environment variable consulted for the default --seed.
inline constexpr const char* kSeedEnvVar = "MAXTIES_SEED";
inline constexpr std::uint64_t kDefaultSeed = 20240101;

/// Entry point of the maxties tool. Documents go to out (or --out), diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace maxties
