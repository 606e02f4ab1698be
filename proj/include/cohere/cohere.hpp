// Copyright 2026 The Cohere Authors
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

// Umbrella header for the numerical library (everything except the CLI).

#pragma once

#include "cohere/bounds.hpp"
#include "cohere/error.hpp"
#include "cohere/haar_average.hpp"
#include "cohere/linalg.hpp"
#include "cohere/measures.hpp"
#include "cohere/mub.hpp"
#include "cohere/states.hpp"
