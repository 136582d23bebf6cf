/*
Copyright (C) 2026 The tdlab Authors.

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

#pragma once

#include "tdlab/catalog.hpp"
#include "tdlab/certify.hpp"
#include "tdlab/exactla/eigen.hpp"
#include "tdlab/exactla/field.hpp"
#include "tdlab/exactla/linalg.hpp"
#include "tdlab/exactla/matrix.hpp"
#include "tdlab/exactla/polynomial.hpp"
#include "tdlab/polybasis.hpp"
#include "tdlab/report.hpp"
#include "tdlab/tdcore/checks.hpp"
#include "tdlab/tdcore/d4.hpp"
#include "tdlab/tdcore/irreducible.hpp"
#include "tdlab/tdcore/system.hpp"
#include "tdlab/tdcore/verify.hpp"
#include "tdlab/tensorspace/complements.hpp"
#include "tdlab/tensorspace/main_theorem.hpp"
#include "tdlab/tensorspace/rspace.hpp"
#include "tdlab/tensorspace/tensor.hpp"
