#pragma once

#include "naples/characterize.hpp"
#include "naples/classify.hpp"
#include "naples/enumerate.hpp"
#include "naples/error.hpp"
#include "naples/preference.hpp"
#include "naples/properties.hpp"
#include "naples/simulator.hpp"
