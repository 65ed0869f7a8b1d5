#pragma once

#define RADCOMP_VERSION "0.1.0"
