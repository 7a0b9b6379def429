import math
from pathlib import Path

# 项目路径
BASE_PATH = Path().absolute().resolve()

# 配置文件文件夹名称
CONFIG_DIR = "config"

# 配置文件文件夹路径
CONFIG_DIR_PATH = BASE_PATH / CONFIG_DIR

# 日志配置文件名称 (在 config/ 下依次查找)
LOGGING_CONFIG_NAMES = ["logging.yml", "logging.yaml"]
# 环境变量: 日志配置文件路径, 优先于 config/ 下的文件
LOGGING_CONFIG_ENV = "COMB_THERMO_LOGGING"
# 包的根 logger
PACKAGE_LOGGER = "combthermo"

SYSTEM_ENCODING = "utf-8"

# 环境变量: sweep 默认并发数
WORKERS_ENV = "COMB_THERMO_WORKERS"

# 数值默认值
DEFAULT_REL_TOL = 1e-8
DEFAULT_ABS_TOL = 1e-10
DEFAULT_ALPHA = math.pi / 4
MIN_REL_TOL = 1e-12

# 振幅极点/分支判定阈值
POLE_TOLERANCE = 1e-12
BRANCH_CUT_TOLERANCE = 1e-14
BRANCH_POINT_TOLERANCE = 1e-300

# 能带扫描
SCAN_STEPS_PER_PI = 64
SCAN_REFINEMENT = 4
SCAN_MAX_REFINEMENTS = 4
EDGE_RELATIVE_TOLERANCE = 1e-12
DEGENERATE_GAP_TOLERANCE = 1e-10
EDGE_EXCLUSION = 1e-9
HV_UNIT_TOLERANCE = 1e-12
# 1 - h^2 低于此值时在能带边缘处线性化态密度
EDGE_LINEARIZATION = 1e-13
# 最后一个能带在 omega_cut 之后最多继续扫描的周期数 (单位 π/a)
SCAN_OVERSHOOT_PERIODS = 64

# 旋转围道角度离 0 与 π/2 的最小距离
ALPHA_MARGIN = 0.02

# 指数尾截断的附加安全量
TAIL_SAFETY = 5.0

# Matsubara 求和上限
MATSUBARA_INITIAL_TERMS = 64
# log|h(iξ)| 低于 -此值 视为虚轴上存在谱
IMAGINARY_AXIS_TOLERANCE = 1e-12
# 虚轴能带扫描越过质量 m 的余量 (单位 1/a)
IMAGINARY_SCAN_MARGIN = 20.0
MATSUBARA_MAX_TERMS = 1_000_000

# 盒子谱的扫描步长 (π/(256a))
BOX_STEPS_PER_PI = 256
# 盒子的最少元胞数
BOX_MIN_CELLS = 8

# CSV 浮点格式
FLOAT_FORMAT = "%.15g"
JSON_DOUBLE_PRECISION = 15

DEFAULT_LOGGER_CONFIG = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "standard": {
            "()": "combthermo.logging.CombThermoFormatter",
            "fmt": "%(asctime)s %(levelprefix)s [%(processName)s] - %(name)s [%(lineno)d] - %(message)s",
            "datefmt": "%Y-%m-%d %H:%M:%S",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "standard",
        },
    },
    "loggers": {
        "combthermo": {"handlers": ["console"], "level": "INFO", "propagate": False},
    },
    "root": {"level": "WARNING", "handlers": ["console"]},
}
