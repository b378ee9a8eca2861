#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "incat/error.hpp"
#include "incat/parallel.hpp"
#include "incat/rational.hpp"
#include "incat/report.hpp"
#include "json.hpp"

namespace incat {

/// Thrown when an instance cannot answer a query, e.g. an antipode request on
/// an incidence bialgebra that is not a Hopf algebra.
class Unsupported : public Error {
 public:
  using Error::Error;
};

enum class Suite { Coalgebra, Bialgebra, WeakHopf, Combinatorial, All };

std::optional<Suite> parse_suite(const std::string& name);
std::string suite_name(Suite s);

/// A parsed instance description. `payload` keeps the whole JSON document so
/// each kind can read its own fields.
struct InstanceConfig {
  std::string kind;
  nlohmann::json payload;
  std::optional<int> max_size;
  std::optional<Rational> scale;
};

const std::vector<std::string>& instance_kinds();

/// Throws ParseError for malformed JSON and InvariantViolation for payloads
/// that fail validation.
InstanceConfig parse_config(const std::string& text);
InstanceConfig load_config(const std::string& path);

struct VerifyOptions {
  std::optional<int> max_size;
  std::uint64_t seed = 0;
  std::optional<std::size_t> sample;
  Exec exec = Exec::Parallel;
};

class Instance {
 public:
  virtual ~Instance() = default;

  virtual std::string kind() const = 0;
  virtual std::string name() const = 0;
  virtual bool supports(Suite s) const = 0;

  /// Runs one suite on the instance's bounded fragment. `All` runs every
  /// supported suite. Throws Unsupported for a suite the kind lacks.
  virtual Report verify(Suite s, const VerifyOptions& options) const = 0;

  virtual std::string coproduct(const std::string& literal) const = 0;
  /// For 2-groups `corollary` selects the closed formula instead of f̄⁻¹.
  virtual std::string antipode(const std::string& literal, bool corollary = false) const = 0;
};

std::unique_ptr<Instance> make_instance(const InstanceConfig& config);

}  // namespace incat
