#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treeshare {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected)
      : Error("parse error at offset " + std::to_string(position) +
              ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

// A formula lies outside the fragment an operation accepts.
class FragmentError : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

// A tree argument is outside the domain of a partial operation (e.g. • or ∘
// passed where a tree of 𝕋⁺ is required).
class DomainError : public Error {
 public:
  using Error::Error;
};

class UnknownPrime : public Error {
 public:
  using Error::Error;
};

class EncodingGap : public Error {
 public:
  using Error::Error;
};

class Inconsistent : public Error {
 public:
  using Error::Error;
};

class NotUnary : public Error {
 public:
  using Error::Error;
};

class UnsupportedSymbol : public Error {
 public:
  using Error::Error;
};

class UnsupportedConstant : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t budget, std::size_t used, std::string progress)
      : Error("node budget of " + std::to_string(budget) +
              " ground evaluations exhausted after " + std::to_string(used) +
              (progress.empty() ? std::string() : " (" + progress + ")")),
        budget_(budget),
        used_(used),
        progress_(std::move(progress)) {}

  std::size_t budget() const noexcept { return budget_; }
  std::size_t used() const noexcept { return used_; }
  const std::string& progress() const noexcept { return progress_; }

 private:
  std::size_t budget_;
  std::size_t used_;
  std::string progress_;
};

}  // namespace treeshare
