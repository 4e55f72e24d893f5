#pragma once

#include <string>
#include <vector>

#include "regsynth/automata.hpp"

namespace regsynth {

/// Set partition of the registers 0..k-1 in canonical form: block ids are
/// numbered 0, 1, ... in order of first occurrence.
struct Partition {
  std::vector<int> block_of;

  static Partition single_block(std::size_t k) { return {std::vector<int>(k, 0)}; }
  /// Renumbers blocks into canonical form.
  static Partition canonical(std::vector<int> block_of);

  std::size_t size() const { return block_of.size(); }
  int num_blocks() const;
  bool same_block(std::size_t m, std::size_t n) const { return block_of[m] == block_of[n]; }
  bool is_canonical() const;
  /// Mask of the registers in block b.
  std::uint64_t block_mask(int b) const;

  /// "{{x,y},{z}}"
  std::string to_string(const std::vector<std::string>& registers) const;

  auto operator<=>(const Partition&) const = default;
};

/// Same-block registers agree on g_i and on g_o, and registers of different
/// blocks are never both marked equal to i (or both to o).
bool guard_consistent(const Partition& pi, std::uint64_t g_in, std::uint64_t g_out);

/// Partition after a step with i-comparisons g_in and stores `assign`.
Partition partition_successor(const Partition& pi, std::uint64_t g_in, std::uint64_t assign);

/// V_k as a deterministic Boolean automaton over G_i ++ G_o ++ Asgn. Every
/// state is accepting in the looping sense; as a universal co-Buchi automaton
/// it has F = {} and rejects nothing it can read.
struct Verifier {
  std::vector<std::string> registers;
  std::vector<Partition> partitions;  // partitions[q] labels state q
  BooleanAutomaton automaton;

  std::size_t num_registers() const { return registers.size(); }
  int index_of(const Partition& pi) const;
};

Verifier build_verifier(const std::vector<std::string>& registers);
/// Registers named r1..rk.
Verifier build_verifier(std::size_t k);

/// A_B @ V, reachable part. `ab` is universal co-Buchi; the verifier signals
/// are matched into ab's alphabet by name. A letter the verifier cannot read
/// has no product transition, so that branch imposes no obligation.
/// `origin`, if given, receives (ab state, verifier state) per product state.
BooleanAutomaton product_with_verifier(const BooleanAutomaton& ab, const Verifier& v,
                                       std::vector<std::pair<int, int>>* origin = nullptr);

/// Verifier with partitions as state labels.
std::string to_dot(const Verifier& v);

}  // namespace regsynth
