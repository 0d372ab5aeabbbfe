/*
 * Copyright 2026 The saves-bench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "saves/png_io.hpp"

#include <png.h>

#include <bit>
#include <cmath>
#include <csetjmp>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "saves/error.hpp"

namespace saves {

namespace {

constexpr png_uint_32 kMaxDimension = 1 << 16;

struct MemoryReader {
  const std::uint8_t* data = nullptr;
  std::size_t size = 0;
  std::size_t offset = 0;
};

// libpng reports errors through longjmp; the handler stashes the message so
// it can be rethrown as a saves::Error once the C frames are unwound.
void PngErrorHandler(png_structp png, png_const_charp message) {
  auto* error_message = static_cast<std::string*>(png_get_error_ptr(png));
  if (error_message != nullptr) *error_message = message;
  longjmp(png_jmpbuf(png), 1);
}

void PngWarningHandler(png_structp, png_const_charp) {}

void MemoryReadCallback(png_structp png, png_bytep out, png_size_t length) {
  auto* reader = static_cast<MemoryReader*>(png_get_io_ptr(png));
  if (reader->offset + length > reader->size) {
    png_error(png, "unexpected end of PNG stream");
  }
  std::memcpy(out, reader->data + reader->offset, length);
  reader->offset += length;
}

void MemoryWriteCallback(png_structp png, png_bytep data, png_size_t length) {
  auto* sink = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
  sink->insert(sink->end(), data, data + length);
}

void MemoryFlushCallback(png_structp) {}

std::vector<std::uint8_t> ReadFileBytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ThrowIo("not found: " + path);
  }
  return std::vector<std::uint8_t>((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
}

}  // namespace

DepthMap DecodeDepthPng(const std::uint8_t* data, std::size_t size) {
  if (size < 8 || png_sig_cmp(data, 0, 8) != 0) {
    ThrowParse("unsupported PNG layout: not a PNG file");
  }

  std::string error_message;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING,
                                           &error_message, PngErrorHandler,
                                           PngWarningHandler);
  if (png == nullptr) {
    ThrowIo("failed to allocate PNG reader");
  }
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    ThrowIo("failed to allocate PNG reader");
  }

  std::vector<std::uint16_t> pixels;
  std::vector<png_bytep> rows;
  png_uint_32 width = 0;
  png_uint_32 height = 0;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    ThrowParse("PNG decode failed: " + error_message);
  }

  png_set_user_limits(png, kMaxDimension, kMaxDimension);
  MemoryReader reader{data, size, 0};
  png_set_read_fn(png, &reader, MemoryReadCallback);
  png_read_info(png, info);

  width = png_get_image_width(png, info);
  height = png_get_image_height(png, info);
  const int bit_depth = png_get_bit_depth(png, info);
  const int color_type = png_get_color_type(png, info);
  if (bit_depth != 16 || color_type != PNG_COLOR_TYPE_GRAY) {
    png_destroy_read_struct(&png, &info, nullptr);
    ThrowParse("unsupported PNG layout: expected single-channel 16-bit");
  }

  if constexpr (std::endian::native == std::endian::little) {
    png_set_swap(png);
  }

  pixels.assign(static_cast<std::size_t>(width) * height, 0);
  rows.resize(height);
  for (png_uint_32 y = 0; y < height; ++y) {
    rows[y] = reinterpret_cast<png_bytep>(pixels.data() +
                                          static_cast<std::size_t>(y) * width);
  }
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  DepthMap map(static_cast<int>(width), static_cast<int>(height));
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    if (pixels[i] != 0) {
      map.Set(static_cast<int>(i % width), static_cast<int>(i / width),
              static_cast<double>(pixels[i]) / 256.0);
    }
  }
  return map;
}

DepthMap ReadDepthPng(const std::string& path) {
  const std::vector<std::uint8_t> bytes = ReadFileBytes(path);
  return DecodeDepthPng(bytes.data(), bytes.size());
}

std::vector<std::uint8_t> EncodeDepthPng(const DepthMap& map) {
  std::vector<std::uint16_t> pixels(map.size(), 0);
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) {
      if (!map.IsValid(x, y)) continue;
      const long long stored = std::llround(map.ValueAt(x, y) * 256.0);
      if (stored > 65535) {
        ThrowInvalidArgument("depth exceeds encodable range");
      }
      pixels[map.Index(x, y)] = static_cast<std::uint16_t>(stored);
    }
  }

  std::string error_message;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING,
                                            &error_message, PngErrorHandler,
                                            PngWarningHandler);
  if (png == nullptr) {
    ThrowIo("failed to allocate PNG writer");
  }
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    ThrowIo("failed to allocate PNG writer");
  }

  std::vector<std::uint8_t> encoded;
  std::vector<png_bytep> rows(map.height());

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    ThrowIo("PNG encode failed: " + error_message);
  }

  png_set_write_fn(png, &encoded, MemoryWriteCallback, MemoryFlushCallback);
  png_set_IHDR(png, info, static_cast<png_uint_32>(map.width()),
               static_cast<png_uint_32>(map.height()), 16,
               PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_BASE, PNG_FILTER_TYPE_BASE);
  png_set_compression_level(png, 6);
  png_write_info(png, info);
  if constexpr (std::endian::native == std::endian::little) {
    png_set_swap(png);
  }
  for (int y = 0; y < map.height(); ++y) {
    rows[y] = reinterpret_cast<png_bytep>(
        pixels.data() + static_cast<std::size_t>(y) * map.width());
  }
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return encoded;
}

void WriteDepthPng(const DepthMap& map, const std::string& path) {
  const std::vector<std::uint8_t> encoded = EncodeDepthPng(map);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    ThrowIo("cannot open for writing: " + path);
  }
  out.write(reinterpret_cast<const char*>(encoded.data()),
            static_cast<std::streamsize>(encoded.size()));
  if (!out) {
    ThrowIo("write failed: " + path);
  }
}

}  // namespace saves
