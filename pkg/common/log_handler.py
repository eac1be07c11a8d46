#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import os
import sys
import time
import reprlib
from functools import wraps
from loguru import logger
from common.path_handler import LOG_PATH
from config.basic_config import basic_config


# 参数与返回值在日志中的缩写长度，矩阵、谱表和图列表只保留开头几项
_short = reprlib.Repr()
_short.maxlist = 6
_short.maxtuple = 6
_short.maxdict = 6
_short.maxstring = 80
_short.maxother = 80


class Logger:
    _instance = None

    @staticmethod
    def setup_logger():
        if Logger._instance is None:
            os.makedirs(LOG_PATH, exist_ok=True)
            log_file = os.path.join(LOG_PATH, f"{basic_config.current_time}.log")
            # 控制台只输出警告以上，命令行的标准输出只留给报告
            logger.remove()
            logger.add(sys.stderr, level=basic_config.console_log_level)
            logger.add(
                log_file,
                level=basic_config.log_level,
                rotation='00:00',
                retention="7 days",
                encoding='utf-8',
                enqueue=True,
                backtrace=True,
                diagnose=True
            )
            Logger._instance = logger
        return Logger._instance


log = Logger.setup_logger()


def brief(value) -> str:
    """日志用的简短表示。"""
    return _short.repr(value)


def log_record(func):
    """
    记录粗粒度操作的参数、简短的返回值与耗时，异常时记录后原样抛出。
    逐图调用的函数不要使用。

    :param func: 待装饰的函数
    :return: 装饰后的函数
    """
    @wraps(func)
    def wrapper(*args, **kwargs):
        log.info(f"开始 {func.__name__}，参数 args={brief(args)}, kwargs={brief(kwargs)}")
        started = time.perf_counter()
        try:
            result = func(*args, **kwargs)
        except Exception as e:
            log.error(f"{func.__name__} 出错: {e}")
            raise
        log.info(f"完成 {func.__name__}，用时 {time.perf_counter() - started:.3f}s，结果 {brief(result)}")
        return result
    return wrapper
