"""
Разбор аргументов, настройка логирования и коды возврата.

Приоритет параметров: флаги CLI > BEI_MAX_VARS > файл конфигурации >
значения по умолчанию из config.py.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, TextIO

from pydantic import ValidationError

import config
from models.errors import BeiError, GraphFormatError, ResourceLimit
from schemas import AppConfig, LoggingConfig
from schemas.reports import VerificationOutcome

from .commands import cmd_analyze, cmd_decompose, cmd_generate, cmd_oracle, cmd_verify
from .render import render

logger = logging.getLogger(__name__)


def setup_logging(settings: LoggingConfig, verbose: bool = False) -> None:
    """Корневой обработчик в stderr."""
    level = logging.DEBUG if verbose else getattr(logging, settings.level)
    logging.basicConfig(level=level, format=settings.format, stream=sys.stderr, force=True)


def _add_oracle_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--char', type=int, dest='field_char', help="характеристика поля: 0 или простое p")
    parser.add_argument('--max-vars', type=int, help="предел числа переменных 2n")
    parser.add_argument('--no-prune', action='store_true', help="перебирать все подмножества W")
    parser.add_argument('--workers', type=int, help="число процессов")
    parser.add_argument('--budget', type=float, dest='time_budget', help="бюджет времени, секунды")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', type=Path, help="JSON-файл конфигурации")
    common.add_argument('--format', choices=("json", "table"), help="формат вывода")
    common.add_argument('--indent', type=int, help="отступ JSON")
    common.add_argument('--allow-large', action='store_true', help="снять пределы экспоненциальных переборов")
    common.add_argument('-v', '--verbose', action='store_true', help="логирование уровня DEBUG")

    parser = argparse.ArgumentParser(
        prog="bei",
        description="Биномиальные рёберные идеалы обобщённых блочных графов",
    )
    commands = parser.add_subparsers(dest='command', required=True)

    analyze = commands.add_parser('analyze', parents=[common], help="инварианты, оценки и классификация")
    analyze.add_argument('file', type=Path)

    verify = commands.add_parser('verify', parents=[common], help="проверка предсказаний оракулом")
    verify.add_argument('file', type=Path)
    _add_oracle_flags(verify)

    oracle = commands.add_parser('oracle', parents=[common], help="таблица Бетти S/in(J_G)")
    oracle.add_argument('file', type=Path)
    _add_oracle_flags(oracle)

    decompose = commands.add_parser('decompose', parents=[common], help="разложение на неразложимые части")
    decompose.add_argument('file', type=Path)

    gen = commands.add_parser('gen', parents=[common], help="случайные обобщённые блочные графы")
    gen.add_argument('--seed', type=int)
    gen.add_argument('--facets', type=int)
    gen.add_argument('--max-clique', type=int)
    gen.add_argument('--count', type=int)
    gen.add_argument('--output-dir', type=Path, help="каталог для файлов графов")
    gen.add_argument('--shuffle-labels', action='store_true', help="случайная перенумерация вершин")
    gen.add_argument('--report', action='store_true', help="отчёт CorpusReport вместо текстового формата графа")
    return parser


def settings_from_args(args: argparse.Namespace) -> AppConfig:
    """Конфигурация с учётом окружения и флагов; ошибки - ValidationError."""
    settings = AppConfig.from_environment(args.config)
    overrides = [
        (settings.output, {'format': args.format, 'indent': args.indent}),
        (settings.oracle, {
            'field_char': getattr(args, 'field_char', None),
            'max_vars': getattr(args, 'max_vars', None),
            'workers': getattr(args, 'workers', None),
            'time_budget': getattr(args, 'time_budget', None),
        }),
        (settings.generator, {
            'seed': getattr(args, 'seed', None),
            'facets': getattr(args, 'facets', None),
            'max_clique': getattr(args, 'max_clique', None),
            'count': getattr(args, 'count', None),
        }),
    ]
    for section, values in overrides:
        for name, value in values.items():
            if value is not None:
                setattr(section, name, value)
    if getattr(args, 'no_prune', False):
        settings.oracle.prune = False
    if args.allow_large:
        settings.enumeration.allow_large = True
    return settings


def _dispatch(args: argparse.Namespace, settings: AppConfig):
    if args.command == 'analyze':
        return cmd_analyze(args.file, settings)
    if args.command == 'verify':
        return cmd_verify(args.file, settings)
    if args.command == 'oracle':
        return cmd_oracle(args.file, settings)
    if args.command == 'decompose':
        return cmd_decompose(args.file, settings)
    return cmd_generate(settings, args.output_dir, args.shuffle_labels, args.report)


def run(argv: Optional[List[str]] = None, out: TextIO = None) -> int:
    """Выполнение команды; возвращает код возврата."""
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        settings = settings_from_args(args)
    except (ValidationError, ValueError) as e:
        print(f"ошибка конфигурации: {e}", file=sys.stderr)
        return config.EXIT_INPUT_ERROR
    setup_logging(settings.logging, args.verbose)

    try:
        result = _dispatch(args, settings)
    except ResourceLimit as e:
        logger.error("превышен предел: %s", e)
        return config.EXIT_RESOURCE_LIMIT
    except GraphFormatError as e:
        logger.error("%s: %s", args.file, e)
        return config.EXIT_INPUT_ERROR
    except (BeiError, ValidationError) as e:
        logger.error("%s", e)
        return config.EXIT_INPUT_ERROR

    print(render(result, settings.output.format, settings.output.indent), file=out)
    if isinstance(result, VerificationOutcome) and not result.passed:
        return config.EXIT_VERIFICATION_FAILED
    return config.EXIT_OK
