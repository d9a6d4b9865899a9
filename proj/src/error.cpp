// Copyright 2026 The chaingeo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chaingeo/error.hpp"

namespace chaingeo {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::CharMismatch: return "CharMismatch";
    case Errc::NotCanonical: return "NotCanonical";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotGalois: return "NotGalois";
    case Errc::NotNonGalois: return "NotNonGalois";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::NotDivisionAlgebra: return "NotDivisionAlgebra";
    case Errc::TransversalIsSpreadLine: return "TransversalIsSpreadLine";
    case Errc::NotSpreadLine: return "NotSpreadLine";
    case Errc::PointNotOnBothChains: return "PointNotOnBothChains";
    case Errc::DimensionError: return "DimensionError";
    case Errc::FrameSearchFailed: return "FrameSearchFailed";
    case Errc::DegenerateSpan: return "DegenerateSpan";
    case Errc::NoRationalLine: return "NoRationalLine";
    case Errc::CentreHit: return "CentreHit";
    case Errc::UnexpectedIntersection: return "UnexpectedIntersection";
    case Errc::InfinityLine: return "InfinityLine";
    case Errc::NotInLCirc: return "NotInLCirc";
    case Errc::NotDegenerate: return "NotDegenerate";
    case Errc::NotNondegenerate: return "NotNondegenerate";
    case Errc::NotRegularPoint: return "NotRegularPoint";
    case Errc::BothZero: return "BothZero";
    case Errc::NotOnGamma0: return "NotOnGamma0";
    case Errc::InvalidPlane: return "InvalidPlane";
    case Errc::UnknownTheorem: return "UnknownTheorem";
    case Errc::ContextUnsupported: return "ContextUnsupported";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(detail.empty() ? std::string(errc_name(code))
                                        : std::string(errc_name(code)) + ": " + detail),
      code_(code) {}

void raise(Errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace chaingeo
