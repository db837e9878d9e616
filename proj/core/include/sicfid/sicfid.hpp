// Copyright 2026 The sicfid Authors
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

#ifndef SICFID_SICFID_HPP
#define SICFID_SICFID_HPP

#include "sicfid/io.hpp"
#include "sicfid/mub.hpp"
#include "sicfid/omega.hpp"
#include "sicfid/search.hpp"
#include "sicfid/verify.hpp"
#include "sicfid/version.hpp"
#include "sicfid/wh_group.hpp"

#endif  // SICFID_SICFID_HPP
