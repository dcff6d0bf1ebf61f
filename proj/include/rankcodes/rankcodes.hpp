/*
   Copyright 2026 The rankcodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RANKCODES_RANKCODES_HPP
#define RANKCODES_RANKCODES_HPP

#include "channel.hpp"
#include "errors.hpp"
#include "folded_gabidulin.hpp"
#include "galois.hpp"
#include "interpolation.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "linearized.hpp"
#include "random.hpp"
#include "recovery.hpp"
#include "subspace.hpp"
#include "subspace_code.hpp"

#endif
