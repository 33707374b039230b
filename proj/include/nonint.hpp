// Copyright 2026 The nonint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NONINT_NONINT_HPP
#define NONINT_NONINT_HPP

#include "nonint/engine.hpp"
#include "nonint/errors.hpp"
#include "nonint/exactnum.hpp"
#include "nonint/frobenius.hpp"
#include "nonint/legendre.hpp"
#include "nonint/model.hpp"
#include "nonint/mpoly.hpp"
#include "nonint/numeric.hpp"
#include "nonint/obstruction.hpp"
#include "nonint/poly.hpp"
#include "nonint/rational.hpp"
#include "nonint/report.hpp"
#include "nonint/series.hpp"
#include "nonint/variational.hpp"

#endif  // NONINT_NONINT_HPP
