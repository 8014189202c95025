#pragma once

#include <stdexcept>
#include <string>

namespace cotyield {

// Error cases surfaced by the library. The names are stable identifiers: the
// CLI prints them verbatim in its one-line diagnostics and tests match on
// them.
enum class Errc {
  NonFiniteInput,
  InvertedRange,
  EmptySeries,
  MalformedRow,
  DuplicateDate,
  UnsortedDates,
  MissingColumn,
  OutOfRange,
  NegativeNitrogen,
  NonPositiveYield,
  TooFewRecords,
  FieldAbsent,
  EmptyInput,
  UnseenCategory,
  InvalidFraction,
  EmptyNodeSet,
  NonFiniteFeature,
  EmptyDataset,
  InvalidConfig,
  WidthMismatch,
  FormatVersionMismatch,
  CorruptTree,
  UnknownFeatureIndex,
  LengthMismatch,
  ZeroVariance,
  NonPositiveActual,
  UnknownLabel,
  EmptyGrid,
  IoError,
};

constexpr const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NonFiniteInput: return "NonFiniteInput";
    case Errc::InvertedRange: return "InvertedRange";
    case Errc::EmptySeries: return "EmptySeries";
    case Errc::MalformedRow: return "MalformedRow";
    case Errc::DuplicateDate: return "DuplicateDate";
    case Errc::UnsortedDates: return "UnsortedDates";
    case Errc::MissingColumn: return "MissingColumn";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NegativeNitrogen: return "NegativeNitrogen";
    case Errc::NonPositiveYield: return "NonPositiveYield";
    case Errc::TooFewRecords: return "TooFewRecords";
    case Errc::FieldAbsent: return "FieldAbsent";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::UnseenCategory: return "UnseenCategory";
    case Errc::InvalidFraction: return "InvalidFraction";
    case Errc::EmptyNodeSet: return "EmptyNodeSet";
    case Errc::NonFiniteFeature: return "NonFiniteFeature";
    case Errc::EmptyDataset: return "EmptyDataset";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::WidthMismatch: return "WidthMismatch";
    case Errc::FormatVersionMismatch: return "FormatVersionMismatch";
    case Errc::CorruptTree: return "CorruptTree";
    case Errc::UnknownFeatureIndex: return "UnknownFeatureIndex";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ZeroVariance: return "ZeroVariance";
    case Errc::NonPositiveActual: return "NonPositiveActual";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::EmptyGrid: return "EmptyGrid";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace cotyield
