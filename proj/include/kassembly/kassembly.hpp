#pragma once

#include "abelian.hpp"
#include "assembly.hpp"
#include "chain.hpp"
#include "errors.hpp"
#include "grouprings.hpp"
#include "groups.hpp"
#include "homology.hpp"
#include "kfield.hpp"
#include "limits.hpp"
#include "matrix.hpp"
#include "smith.hpp"
#include "sparse.hpp"
