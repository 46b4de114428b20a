/*
 * Copyright 2026 The dirlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "dirlab/error.hpp"

namespace dirlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::InvalidModulus: return "InvalidModulus";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::JOutOfRange: return "JOutOfRange";
    case ErrorKind::IndexDoesNotDivide: return "IndexDoesNotDivide";
    case ErrorKind::InvalidElement: return "InvalidElement";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::NonzeroAtOrigin: return "NonzeroAtOrigin";
    case ErrorKind::ZeroValueAtNonzeroPoint: return "ZeroValueAtNonzeroPoint";
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::FieldTooLargeForExhaustion: return "FieldTooLargeForExhaustion";
    case ErrorKind::SearchLimitExceeded: return "SearchLimitExceeded";
    case ErrorKind::UnrepresentableInFormat: return "UnrepresentableInFormat";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace dirlab
