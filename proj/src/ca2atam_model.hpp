#pragma once
// Internal layout/program model shared by the generator, the manifest and
// the representation reader. Definition lives in ca2atam_gen.cpp.
#include "catam/ca2atam.hpp"
