#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "regsynth/automata.hpp"

namespace regsynth {

struct GuessingAutomaton;

/// Line-based textual formats, version 1.
///
/// Every file may start with the line `# regsynth-format 1`; other lines
/// starting with `#` are comments. A header line is `key: value`; unknown keys
/// are rejected. Records are `|`-separated lines.
///
/// Register automaton (`.ra`):
///
///     mode: universal-co-buchi | nondeterministic-buchi
///     bool_signals: req, grant          (or -)
///     registers: r                      (or -)
///     init_value: 0                     (optional, default 0)
///     states: q0, q1
///     initial: q0
///     accepting: q1                     (or -)
///     q0 | req, grant? | * | * | 1 | q1
///
/// A record is `src | letter | i-guard | o-guard | store | dst`. A letter is
/// `-` (no signal true), `*` (any valuation) or a comma list in which `s`
/// means s is true, `!s` means s is false and `s?` leaves s free; signals not
/// listed are false. Guards and stores are strings of length k over {0,1};
/// guards also accept `*` per position (unconstrained) and a lone `*` for all
/// positions. A zero-length string is written `-`.
///
/// Register transducer (`.rt`):
///
///     inputs: req
///     out: grant
///     registers: r
///     init_value: 0                     (optional, default 0)
///     states: s0, s1
///     initial: s0
///     outreg: 1                         (default output register, 1-based)
///     default: none | self
///     s0 | req | * | - | 1 | 1 | s1
///
/// A record is `src | input-letter | i-guard | output-letter | outreg | store |
/// dst` with outreg 1-based. With `default: self` the cases no record covers
/// are self-loops that output nothing, read the `outreg` register and store
/// nothing; with `default: none` they are an error. Two records covering the
/// same case with different outcomes are an error.
///
/// Boolean automata and Mealy machines use the same formats with
/// `registers: -` (guards, stores and outreg written `-`).
///
/// Data word (`.dw`):
///
///     bool_signals: req, grant
///     prefix:
///     req | 5 | 0
///     loop:
///     - | 0 | 0
///
/// Register-guessing automaton (`.ga`): like `.ra` without `init_value`, with
/// `inequalities: r1 != r2, ...` (or -) and records `src | letter | i-guard |
/// o-guard | dst`.

inline constexpr std::string_view kFormatHeader = "# regsynth-format 1";

RegisterAutomaton parse_register_automaton(std::string_view text);
std::string format_register_automaton(const RegisterAutomaton& a);

BooleanAutomaton parse_boolean_automaton(std::string_view text);
std::string format_boolean_automaton(const BooleanAutomaton& a);

RegisterTransducer parse_register_transducer(std::string_view text);
std::string format_register_transducer(const RegisterTransducer& t);

BooleanTransducer parse_boolean_transducer(std::string_view text);
std::string format_boolean_transducer(const BooleanTransducer& t);

DataWord parse_data_word(std::string_view text);
std::string format_data_word(const DataWord& w);

GuessingAutomaton parse_guessing_automaton(std::string_view text);
std::string format_guessing_automaton(const GuessingAutomaton& a);

/// Letter notation used by the formats.
std::string format_letter(const Cube& c, const SignalSet& signals);
std::string format_letter(Letter l, const SignalSet& signals);
Cube parse_letter(std::string_view text, const SignalSet& signals);

std::string to_dot(const RegisterAutomaton& a);
std::string to_dot(const BooleanAutomaton& a);
std::string to_dot(const RegisterTransducer& t);
std::string to_dot(const BooleanTransducer& t);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace regsynth
