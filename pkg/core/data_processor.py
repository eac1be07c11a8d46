#!/usr/bin/env python
# _*_ coding:utf-8 _*_
import os
import json
import codecs
from functools import wraps
from common.path_handler import TEST_DATA_DIR


# 定义一个命名数据字典类，继承自内置的字典类型
class NamedDataDict(dict):
    def __init__(self, name, **kwargs):
        # 调用父类（dict）的初始化方法，初始化字典内容
        super(NamedDataDict, self).__init__(kwargs)
        # 检查名称是否为字符串类型，若不是则抛出异常
        if not isinstance(name, str):
            raise ValueError("Name must be a string.")
        # 存储名称属性
        self.name = name

    def __str__(self):
        return f"NamedDataDict(Name={self.name}, Keys={sorted(self)})"


def resolve_data_path(relative_path, reference_path=None):
    """
    将黄金数据文件的相对路径转换为绝对路径，默认相对于测试数据目录。

    :param relative_path: 相对路径
    :param reference_path: 参考路径，默认为 None
    :return: 绝对路径
    """
    if reference_path is None:
        reference_path = TEST_DATA_DIR
    return os.path.join(reference_path, relative_path)


def process_file_data(file_path):
    """
    读取 JSON 文件并返回解析后的数据；文件不存在时抛出 FileNotFoundError。

    :param file_path: 文件路径
    :return: JSON 数据
    """
    if not os.path.isabs(file_path):
        file_path = resolve_data_path(file_path)
    if not os.path.exists(file_path):
        raise FileNotFoundError(f"File not found: {file_path}")
    with codecs.open(file_path, 'r', 'utf-8') as f:
        return json.load(f)


def file_data_dict(file_path):
    """
    读取文件中的字典数据，包装成 NamedDataDict 后作为 named_dict_data 参数传给被装饰的函数。

    :param file_path: 文件路径
    :return: 装饰后的函数
    """
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            resolved_path = resolve_data_path(file_path)
            data = process_file_data(resolved_path)
            if isinstance(data, dict):
                named_data = NamedDataDict(resolved_path, **data)
                return func(*args, named_dict_data=named_data, **kwargs)
            raise ValueError(f"Data from file {file_path} is not a dict.")
        return wrapper
    return decorator


def load_golden_data(file_path='golden_data.json'):
    @file_data_dict(file_path)
    def _load(named_dict_data):
        return named_dict_data
    return _load()


def expect_result(dict_data):
    """
    按被装饰测试方法的名称取出 dict_data 中对应条目的 'expect' 值，作为第一个位置参数传入。

    :param dict_data: 测试方法名到黄金数据的映射
    :return: 装饰后的函数
    """
    def decorator(func):
        @wraps(func)
        def wrapper(self, *args, **kwargs):
            value = dict_data.get(func.__name__).get('expect')
            return func(self, value, *args, **kwargs)
        return wrapper
    return decorator


def case_data(dict_data):
    """
    按被装饰测试方法的名称取出 dict_data 中对应的整个条目（含 'input' 与 'expect'），作为第一个位置参数传入。

    :param dict_data: 测试方法名到黄金数据的映射
    :return: 装饰后的函数
    """
    def decorator(func):
        @wraps(func)
        def wrapper(self, *args, **kwargs):
            return func(self, dict_data.get(func.__name__), *args, **kwargs)
        return wrapper
    return decorator
