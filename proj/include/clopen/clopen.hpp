#pragma once

#include "clopen/base.hpp"
#include "clopen/boolean_algebra.hpp"
#include "clopen/clopen_algebra.hpp"
#include "clopen/compactification.hpp"
#include "clopen/enumeration.hpp"
#include "clopen/function_algebra.hpp"
#include "clopen/json_io.hpp"
#include "clopen/topology.hpp"
#include "clopen/ultrafilter_space.hpp"
#include "clopen/valued_field.hpp"
#include "clopen/verify.hpp"
