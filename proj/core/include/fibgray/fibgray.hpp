#pragma once

#include "fibgray/basis.hpp"
#include "fibgray/codec.hpp"
#include "fibgray/digit_string.hpp"
#include "fibgray/errors.hpp"
#include "fibgray/graycode.hpp"
#include "fibgray/language.hpp"
#include "fibgray/natural.hpp"
#include "fibgray/oracle.hpp"
#include "fibgray/perm.hpp"
#include "fibgray/size_guard.hpp"
