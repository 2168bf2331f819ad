#pragma once

#include <optional>
#include <string>
#include <vector>

namespace parsum {

// Deliberate defects that can be switched on at run time to confirm that the
// verification suites notice a broken law. Off unless explicitly enabled.
enum class Fault {
  none,
  inj_compose,      // composite rows tabulated with too short a period
  symcat_braiding,  // SymCat braiding replaced by the identity
  phi_u_circ,       // Phi structure maps ignore the reordering of entries
  phi_sum_shuffle,  // Phi sum of morphisms skips the coherence conjugation
  sigma_braiding,   // Sigma braiding built from phi instead of its rotation
  mu_symmetry,      // mu_* symmetry built from mu on both sides
  t_monotone,       // T reads off the canonical representative unconjugated
  s_conjugation,    // S reads off the canonical representative unconjugated
};

void set_fault(Fault f);
Fault active_fault();
inline bool fault_active(Fault f) { return active_fault() == f; }

std::string fault_name(Fault f);
std::optional<Fault> parse_fault(const std::string& name);
std::vector<Fault> all_faults();

class ScopedFault {
 public:
  explicit ScopedFault(Fault f) : previous_(active_fault()) { set_fault(f); }
  ~ScopedFault() { set_fault(previous_); }
  ScopedFault(const ScopedFault&) = delete;
  ScopedFault& operator=(const ScopedFault&) = delete;

 private:
  Fault previous_;
};

}  // namespace parsum
