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

#ifndef PLCGEN_ERRORS_HPP
#define PLCGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plcgen
{

// Root of every error thrown by the library. Each subclass maps to one
// stable CLI exit code (see exit_code() in tools/plcgen.cpp).
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a formula (negative frequency,
// non-positive cable dimension, ...).
class domain_error : public error
{
public:
    using error::error;
};

// Lookup of a named entity (cable type, phase model) that does not exist.
class unknown_entity_error : public error
{
public:
    using error::error;
};

class unsupported_class_error : public error
{
public:
    using error::error;
};

class unsupported_cluster_error : public error
{
public:
    using error::error;
};

// A fitted parameter function evaluates outside its valid range, e.g. a
// non-positive GEV scale.
class parameter_domain_error : public error
{
public:
    using error::error;
};

// Embedded constant tables produce an impossible value (non-positive variance).
class data_integrity_error : public error
{
public:
    using error::error;
};

class truncation_exhausted_error : public error
{
public:
    using error::error;
};

// Path propagation distance below the range where the cable-loss fit is passive.
class distance_domain_error : public error
{
public:
    using error::error;
};

class grid_error : public error
{
public:
    using error::error;
};

// Malformed input document (realization file, config file).
class input_error : public error
{
public:
    using error::error;
};

} // namespace plcgen

#endif
