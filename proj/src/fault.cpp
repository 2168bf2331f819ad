#include "parsum/fault.hpp"

#include <atomic>
#include <utility>

namespace parsum {

namespace {
std::atomic<Fault> g_fault{Fault::none};

const std::vector<std::pair<Fault, std::string>>& fault_table() {
  static const std::vector<std::pair<Fault, std::string>> table = {
      {Fault::none, "none"},
      {Fault::inj_compose, "inj-compose"},
      {Fault::symcat_braiding, "symcat-braiding"},
      {Fault::phi_u_circ, "phi-u-circ"},
      {Fault::phi_sum_shuffle, "phi-sum-shuffle"},
      {Fault::sigma_braiding, "sigma-braiding"},
      {Fault::mu_symmetry, "mu-symmetry"},
      {Fault::t_monotone, "t-monotone"},
      {Fault::s_conjugation, "s-conjugation"},
  };
  return table;
}
}  // namespace

void set_fault(Fault f) { g_fault.store(f); }
Fault active_fault() { return g_fault.load(std::memory_order_relaxed); }

std::string fault_name(Fault f) {
  for (const auto& [k, name] : fault_table())
    if (k == f) return name;
  return "unknown";
}

std::optional<Fault> parse_fault(const std::string& name) {
  for (const auto& [k, n] : fault_table())
    if (n == name) return k;
  return std::nullopt;
}

std::vector<Fault> all_faults() {
  std::vector<Fault> out;
  for (const auto& [k, name] : fault_table())
    if (k != Fault::none) out.push_back(k);
  return out;
}

}  // namespace parsum
