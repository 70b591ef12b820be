//
// Project screenlab - Copyright 2026 The screenlab developers
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SCREENLAB_ERROR_HPP
#define SCREENLAB_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace screenlab {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline std::string with_pos(const std::string& msg, std::size_t pos) {
  return msg + " (at position " + std::to_string(pos) + ")";
}
}  // namespace detail

// --- molecular graph / SMILES ---

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error(detail::with_pos("SMILES syntax error: " + msg, pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class ValenceError : public Error {
 public:
  explicit ValenceError(const std::string& msg) : Error("valence error: " + msg) {}
};

class UnsupportedFeature : public Error {
 public:
  UnsupportedFeature(const std::string& msg, std::size_t pos)
      : Error(detail::with_pos("unsupported SMILES feature: " + msg, pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class PatternTooLarge : public Error {
 public:
  explicit PatternTooLarge(std::size_t n)
      : Error("pattern too large: " + std::to_string(n) + " atoms (limit 16)") {}
};

// --- descriptors / stats ---

class DegeneratePopulation : public Error {
 public:
  explicit DegeneratePopulation(const std::string& msg)
      : Error("degenerate population: " + msg) {}
};

class EmptyInput : public Error {
 public:
  explicit EmptyInput(const std::string& msg) : Error("empty input: " + msg) {}
};

class DegenerateInput : public Error {
 public:
  explicit DegenerateInput(const std::string& msg) : Error("degenerate input: " + msg) {}
};

class InsufficientData : public Error {
 public:
  explicit InsufficientData(const std::string& msg) : Error("insufficient data: " + msg) {}
};

// --- fingerprints ---

class WidthMismatch : public Error {
 public:
  explicit WidthMismatch(const std::string& msg) : Error("fingerprint mismatch: " + msg) {}
};

// --- druglikeness ---

class MissingDescriptor : public Error {
 public:
  explicit MissingDescriptor(const std::string& msg) : Error("missing descriptor: " + msg) {}
};

class CorpusTooSmall : public Error {
 public:
  explicit CorpusTooSmall(std::size_t n, std::size_t need)
      : Error("corpus too small: " + std::to_string(n) + " molecules, need " +
              std::to_string(need)) {}
};

class EmptyFragmentScores : public Error {
 public:
  EmptyFragmentScores() : Error("fragment score table is empty") {}
};

// --- structure I/O ---

class MalformedRecord : public Error {
 public:
  MalformedRecord(const std::string& msg, std::size_t line)
      : Error("malformed record at line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class EmptyStructure : public Error {
 public:
  explicit EmptyStructure(const std::string& msg) : Error("empty structure: " + msg) {}
};

class MissingEnergyRemark : public Error {
 public:
  explicit MissingEnergyRemark(const std::string& msg)
      : Error("missing energy remark: " + msg) {}
};

class TruncatedModel : public Error {
 public:
  explicit TruncatedModel(const std::string& msg) : Error("truncated model: " + msg) {}
};

class UnparameterizedElement : public Error {
 public:
  explicit UnparameterizedElement(const std::string& msg)
      : Error("unparameterized element: " + msg) {}
};

// Descriptor-level variant: an atom outside the contribution tables. The
// descriptor code prefers to flag and continue, but strict callers can throw.
class UnparameterizedAtom : public Error {
 public:
  explicit UnparameterizedAtom(const std::string& msg)
      : Error("unparameterized atom: " + msg) {}
};

// --- pipeline / CLI ---

class UnparseableSeed : public Error {
 public:
  explicit UnparseableSeed(const std::string& msg) : Error("unparseable seed: " + msg) {}
};

class MissingReportSection : public Error {
 public:
  explicit MissingReportSection(const std::string& msg)
      : Error("missing report section: " + msg) {}
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& msg) : Error(msg) {}
};

}  // namespace screenlab

#endif  // SCREENLAB_ERROR_HPP
