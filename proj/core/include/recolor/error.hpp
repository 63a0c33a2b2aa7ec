#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace recolor {

enum class ErrorCode {
  InvalidEdge,
  VertexOutOfRange,
  NotIndependent,
  ShapeError,
  NotProper,
  ImproperStep,
  NoOpStep,
  PaletteError,
  TooLarge,
  MethodMismatch,
  PaletteTooSmall,
  NotBipartite,
  PaletteClash,
  BadWitness,
  BadPermutation,
  NotBipartition,
  NotMixing,
  NotClassConstant,
  ParseError,
};

inline const char* name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::ImproperStep: return "ImproperStep";
    case ErrorCode::NoOpStep: return "NoOpStep";
    case ErrorCode::PaletteError: return "PaletteError";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::MethodMismatch: return "MethodMismatch";
    case ErrorCode::PaletteTooSmall: return "PaletteTooSmall";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::PaletteClash: return "PaletteClash";
    case ErrorCode::BadWitness: return "BadWitness";
    case ErrorCode::BadPermutation: return "BadPermutation";
    case ErrorCode::NotBipartition: return "NotBipartition";
    case ErrorCode::NotMixing: return "NotMixing";
    case ErrorCode::NotClassConstant: return "NotClassConstant";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

// Every library failure is thrown as an Error. `code` identifies the failure
// class; `index` carries a step index or input line number where one applies.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(name(code)) + ": " + message), code_(code) {}
  Error(ErrorCode code, const std::string& message, std::size_t index)
      : std::runtime_error(std::string(name(code)) + " at " + std::to_string(index) + ": " + message),
        code_(code),
        index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace recolor
