#pragma once

#include "gr/core.hpp"
#include "gr/ornament.hpp"
#include "gr/bijection.hpp"
#include "gr/enumeration.hpp"
#include "gr/verify.hpp"
