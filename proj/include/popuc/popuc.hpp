/*
   Copyright 2026 The popuc Authors

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

#ifndef POPUC_POPUC_HPP
#define POPUC_POPUC_HPP

#include "chain.hpp"
#include "conjecture.hpp"
#include "error.hpp"
#include "io.hpp"
#include "kronecker.hpp"
#include "numtheory.hpp"
#include "orthogonality.hpp"
#include "ratpoly.hpp"
#include "rational.hpp"

#endif // POPUC_POPUC_HPP
