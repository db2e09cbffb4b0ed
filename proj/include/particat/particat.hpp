#pragma once

#include "category.hpp"
#include "errors.hpp"
#include "fusion.hpp"
#include "io.hpp"
#include "limits.hpp"
#include "matrix.hpp"
#include "matrix_model.hpp"
#include "partition.hpp"
#include "structure.hpp"
#include "symmetry.hpp"
#include "verify.hpp"
