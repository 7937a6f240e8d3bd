#pragma once

#include "big_count.hpp"
#include "bijection.hpp"
#include "canonical.hpp"
#include "core.hpp"
#include "enumeration.hpp"
#include "error.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "recognition.hpp"
#include "ssyt.hpp"
#include "stream.hpp"
#include "verify.hpp"
