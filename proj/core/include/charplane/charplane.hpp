// Copyright 2026 The charplane Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHARPLANE_CHARPLANE_HPP
#define CHARPLANE_CHARPLANE_HPP

#include "charplane/error.hpp"
#include "charplane/extnat.hpp"
#include "charplane/field.hpp"
#include "charplane/intersect.hpp"
#include "charplane/invariants.hpp"
#include "charplane/newton.hpp"
#include "charplane/poly.hpp"
#include "charplane/resolve.hpp"
#include "charplane/semigroup.hpp"
#include "charplane/tameness.hpp"
#include "charplane/upoly.hpp"

#endif  // CHARPLANE_CHARPLANE_HPP
