package org.example.scope;

import java.util.List;
import java.util.function.Function;

public class Shadowing {
    private int count;
    private String name;
    private List<String> items;

    // parameter hides the field
    public void setCount(int count) {
        this.count = count;
    }

    // local hides the field only after its declaration
    public int local() {
        int before = count;
        int count = 3;
        return before + count;
    }

    // lambda parameter hides the field inside the lambda only
    public Function<String, Integer> lambda() {
        return name -> name.length() + items.size();
    }

    public String inner() {
        for (String name : items) {
            if (name.isEmpty()) {
                return name;
            }
        }
        return name;
    }

    public int untouched(int x) {
        int y = x * 2;
        return y;
    }
}
