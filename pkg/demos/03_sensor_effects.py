"""Sensor-effect chain: bloom, color adjustment, noise, gamma encoding.

Renders a frame with a hot specular highlight and pushes it through the
post-processing pipeline one stage at a time, writing the intermediate
images so the contribution of each stage is visible.
"""

import numpy as np

from satforge import (
    Ambient,
    BloomParams,
    CameraModel,
    ColorParams,
    Material,
    NoiseParams,
    Pose,
    Quaternion,
    SceneConfig,
    SensorEffects,
    Sunlight,
    apply_bloom,
    apply_color_adjust,
    apply_noise,
    apply_pipeline,
    build_bvh,
    encode_8bit,
    render_frame,
    to_grayscale,
)
from satforge import rng as rngmod
from satforge.formats import write_png
from satforge.models import make_satellite
from demo_helpers import outdir

out = outdir("03_sensor_effects")
mesh, _ = make_satellite()
bvh = build_bvh(mesh)
materials = (
    Material(albedo=(0.8, 0.78, 0.75)),
    Material(albedo=(0.3, 0.32, 0.5), specular_strength=1.0, shininess=300.0, high_quality=True),
)
camera = CameraModel(width=384, height=384, fx=450.0, fy=450.0, cx=192.0, cy=192.0)
scene = SceneConfig(camera=camera,
                    lights=(Sunlight(direction=np.array([0.1, 0.25, 0.96]) /
                                     np.linalg.norm([0.1, 0.25, 0.96]), intensity=9.0),
                            Ambient(0.03)))
pose = Pose(Quaternion.from_axis_angle((1.0, 0.2, 0.1), -0.55), np.array([0.0, 0.0, 3.2]))
linear = render_frame(mesh, bvh, pose, scene, materials).color
print(f"linear-light peak value: {linear.max():.2f} (bloom threshold will clip at 1.0)")

write_png(out / "0_raw.png", encode_8bit(linear))

bloomed = apply_bloom(linear, threshold=1.0, intensity=0.8, radius=6.0)
write_png(out / "1_bloom.png", encode_8bit(bloomed))
print(f"energy added by bloom: {(bloomed - linear).sum():.2f}")

colored = apply_color_adjust(bloomed, saturation=0.75, contrast=1.15, temperature_shift=0.06)
write_png(out / "2_color.png", encode_8bit(colored))

noisy = apply_noise(colored, NoiseParams(gaussian_sigma=0.02, shot_gain=0.01, enabled=True),
                    rngmod.stream(3, "demo-noise"))
write_png(out / "3_noise.png", encode_8bit(noisy))

write_png(out / "4_gray.png", encode_8bit(to_grayscale(noisy)))

# the same chain through the one-call pipeline, grayscale output
effects = SensorEffects(
    bloom=BloomParams(threshold=1.0, intensity=0.8, radius=6.0, enabled=True),
    color=ColorParams(saturation=0.75, contrast=1.15, temperature_shift=0.06, enabled=True),
    noise=NoiseParams(gaussian_sigma=0.02, shot_gain=0.01, enabled=True),
)
final = apply_pipeline(linear, effects, rngmod.stream(3, "demo-noise"), gray=True)
write_png(out / "pipeline_gray.png", final)
print(f"wrote effect chain stages to {out}")

neutral = apply_pipeline(linear, SensorEffects(), rngmod.stream(0, "x"))
print("all effects disabled equals plain encode:",
      bool(np.array_equal(neutral, encode_8bit(linear))))
