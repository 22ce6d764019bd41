"""
Константы по умолчанию.
Все магические числа и настройки собраны здесь; pydantic-схемы из schemas/
берут из этого модуля значения по умолчанию.
"""

# ============================================================
# Оракул (Хохстер + начальный идеал)
# ============================================================
ORACLE_MAX_VARS = 20  # 2n переменных, т.е. n <= 10
ORACLE_FIELD_CHAR = 0  # 0 - рациональные числа, иначе простое p
ORACLE_PRUNE = True  # Отсекать конусы в переборе подмножеств W
ORACLE_WORKERS = 1  # Число процессов для перебора W
ORACLE_TIME_BUDGET = 600.0  # Секунды на один расчёт таблицы Бетти
ORACLE_MAX_SUBSETS = 1 << 22  # Предел числа рассматриваемых подмножеств W
ORACLE_CHUNK_SIZE = 512  # Размер статической порции W для одного процесса

# ============================================================
# Экспоненциальные переборы
# ============================================================
CUT_POINT_MAX_N = 16  # Предел n для перечисления C(G)
INDUCED_PATH_MAX_N = 24  # Предел n для поиска l(G)
EXHAUSTIVE_CUT_SET_MAX_N = 18  # Предел n для проверки разрезов полным перебором

# ============================================================
# Генератор обобщённых блочных графов
# ============================================================
GENERATOR_SEED = 0
GENERATOR_FACETS = 4
GENERATOR_MAX_CLIQUE = 3
GENERATOR_COUNT = 1
GENERATOR_NEW_JUNCTION_PROBABILITY = 0.5  # Вероятность открыть новое сочленение

# ============================================================
# Вывод и логирование
# ============================================================
OUTPUT_FORMAT = "json"
OUTPUT_INDENT = 2
LOG_LEVEL = "WARNING"
LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

# ============================================================
# Окружение и коды возврата CLI
# ============================================================
ENV_MAX_VARS = "BEI_MAX_VARS"

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_VERIFICATION_FAILED = 2
EXIT_RESOURCE_LIMIT = 3
