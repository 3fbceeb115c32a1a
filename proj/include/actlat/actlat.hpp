//
// actlat - finite monoid acts, congruence lattices and chain conditions
// Copyright (C) 2026 actlat contributors
//
// This program is free software: you can redistribute it and/or modify
// it under the terms of the GNU General Public License as published by
// the Free Software Foundation, either version 3 of the License, or
// (at your option) any later version.
//
// This program is distributed in the hope that it will be useful,
// but WITHOUT ANY WARRANTY; without even the implied warranty of
// MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
// GNU General Public License for more details.
//
// You should have received a copy of the GNU General Public License
// along with this program.  If not, see <http://www.gnu.org/licenses/>.
//
// Convenience header including the whole library.

#ifndef ACTLAT_ACTLAT_HPP_
#define ACTLAT_ACTLAT_HPP_

#include "act.hpp"
#include "config.hpp"
#include "congruence.hpp"
#include "corpus.hpp"
#include "exactness.hpp"
#include "monoid.hpp"
#include "morphism.hpp"
#include "poset.hpp"
#include "properties.hpp"
#include "random.hpp"
#include "verify.hpp"

#endif  // ACTLAT_ACTLAT_HPP_
