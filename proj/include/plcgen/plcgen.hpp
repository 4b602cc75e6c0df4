// SPDX-License-Identifier: Apache-2.0
//
// plcgen - statistical powerline communication channel generator
// Copyright (C) 2026 The plcgen authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef PLCGEN_PLCGEN_HPP
#define PLCGEN_PLCGEN_HPP

#include "cable_params.hpp"
#include "channel_synthesis.hpp"
#include "errors.hpp"
#include "impulse_response.hpp"
#include "io.hpp"
#include "param_tables.hpp"
#include "path_statistics.hpp"
#include "random.hpp"
#include "validation.hpp"

#endif
