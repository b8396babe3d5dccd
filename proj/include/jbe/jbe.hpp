// Copyright 2026 the jbe authors.
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

#ifndef JBE_JBE_HPP
#define JBE_JBE_HPP

#include "jbe/edge_laws.hpp"
#include "jbe/hypergeom.hpp"
#include "jbe/jack.hpp"
#include "jbe/linalg.hpp"
#include "jbe/montecarlo.hpp"
#include "jbe/partitions.hpp"
#include "jbe/quadrature.hpp"
#include "jbe/rng.hpp"
#include "jbe/sampling.hpp"
#include "jbe/selberg.hpp"
#include "jbe/special.hpp"
#include "jbe/validate.hpp"
#include "jbe/version.hpp"

#endif  // JBE_JBE_HPP
