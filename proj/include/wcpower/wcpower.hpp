// Copyright 2026 The wcpower Authors
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

#ifndef WCPOWER_WCPOWER_HPP
#define WCPOWER_WCPOWER_HPP

#include "wcpower/committee.hpp"
#include "wcpower/errors.hpp"
#include "wcpower/imf.hpp"
#include "wcpower/io.hpp"
#include "wcpower/power_exact.hpp"
#include "wcpower/power_mc.hpp"
#include "wcpower/ranking.hpp"
#include "wcpower/rational.hpp"
#include "wcpower/render.hpp"
#include "wcpower/rules.hpp"
#include "wcpower/simplex.hpp"

#endif  // WCPOWER_WCPOWER_HPP
