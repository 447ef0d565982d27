#pragma once

#include "mphide/attack.hpp"
#include "mphide/disguise.hpp"
#include "mphide/error.hpp"
#include "mphide/euclid.hpp"
#include "mphide/exact.hpp"
#include "mphide/hide_recover.hpp"
#include "mphide/keyexchange.hpp"
#include "mphide/matrix.hpp"
#include "mphide/workspace.hpp"
