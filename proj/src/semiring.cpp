// Copyright 2026 The Authors.
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

#include "sbrep/semiring.hpp"

namespace sbrep {

char sb_to_char(SbElem a) {
  switch (a) {
    case SbElem::kZero:
      return '0';
    case SbElem::kOne:
      return '1';
    default:
      return 'v';
  }
}

SbElem sb_from_token(std::string_view token) {
  if (token == "0") return SbElem::kZero;
  if (token == "1") return SbElem::kOne;
  if (token == "v") return SbElem::kGhost;
  fail(ErrorCode::kParse, "bad scalar token '" + std::string(token) +
                              "' (expected 0, 1, or v)");
}

SbElem sb_of_model(const SuperBooleanModel::Elem& e) {
  switch (e.sort) {
    case Sort::kZero:
      return SbElem::kZero;
    case Sort::kTangible:
      return SbElem::kOne;
    default:
      return SbElem::kGhost;
  }
}

SuperBooleanModel::Elem model_of_sb(SbElem a) {
  return embed_sb<BooleanSemiring>(a);
}

}  // namespace sbrep
